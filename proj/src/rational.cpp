#include "learnlab/rational.hpp"

namespace learnlab {

Rat rat_parse(std::string_view text) {
    Rat q;
    if (q.set_str(std::string(text), 10) != 0)
        throw std::invalid_argument("unparsable rational: '" + std::string(text) + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace learnlab
