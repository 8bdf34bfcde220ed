#include "learnlab/network.hpp"

#include <cmath>
#include <stdexcept>

namespace learnlab {

void Dims::validate() const {
    if (m < 1 || n < 1 || p < 1)
        throw std::invalid_argument("dims require m >= 1, n >= 1, p >= 1");
}

ParamVec ParamVec::zeros(const Dims& dims) {
    dims.validate();
    ParamVec out;
    out.v.assign(static_cast<size_t>(dims.m), 0.0);
    out.s = 0.0;
    out.w.assign(static_cast<size_t>(dims.m) * dims.n, 0.0);
    out.t.assign(static_cast<size_t>(dims.m), 0.0);
    return out;
}

std::vector<double> ParamVec::flatten() const {
    std::vector<double> out;
    out.reserve(v.size() + 1 + w.size() + t.size());
    out.insert(out.end(), v.begin(), v.end());
    out.push_back(s);
    out.insert(out.end(), w.begin(), w.end());
    out.insert(out.end(), t.begin(), t.end());
    return out;
}

ParamVec ParamVec::from_flat(const Dims& dims, std::span<const double> flat) {
    dims.validate();
    if (static_cast<int>(flat.size()) != dims.q())
        throw std::invalid_argument("flat parameter vector has wrong length");
    ParamVec out;
    size_t pos = 0;
    out.v.assign(flat.begin(), flat.begin() + dims.m);
    pos += static_cast<size_t>(dims.m);
    out.s = flat[pos++];
    out.w.assign(flat.begin() + pos, flat.begin() + pos + static_cast<size_t>(dims.m) * dims.n);
    pos += static_cast<size_t>(dims.m) * dims.n;
    out.t.assign(flat.begin() + pos, flat.end());
    return out;
}

void ParamVec::check_shapes(const Dims& dims) const {
    if (static_cast<int>(v.size()) != dims.m || static_cast<int>(t.size()) != dims.m ||
        static_cast<int>(w.size()) != dims.m * dims.n)
        throw std::invalid_argument("parameter shapes inconsistent with dims");
}

TrainingSet::TrainingSet(std::vector<std::vector<double>> gamma_in, std::vector<double> zeta_in)
    : gamma(std::move(gamma_in)), zeta(std::move(zeta_in)) {
    if (gamma.empty()) throw std::invalid_argument("training set requires p >= 1");
    if (gamma.size() != zeta.size())
        throw std::invalid_argument("gamma and zeta lengths differ");
    const size_t n = gamma.front().size();
    for (const auto& g : gamma)
        if (g.size() != n) throw std::invalid_argument("gamma points have mixed dimensions");
    for (size_t i = 0; i < gamma.size(); ++i)
        for (size_t j = i + 1; j < gamma.size(); ++j)
            if (gamma[i] == gamma[j])
                throw std::invalid_argument("gamma points must be pairwise distinct");
}

double dot(std::span<const double> a, std::span<const double> b) {
    double sum = 0.0;
    for (size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

namespace {

// Shared forward pass: hidden pre-activations z_k, hidden values h_k, output
// pre-activation u.
struct ForwardState {
    std::vector<double> z;
    std::vector<double> h;
    double u = 0.0;
};

ForwardState forward_state(const Dims& dims, const Activation& g, const ParamVec& params,
                           std::span<const double> x) {
    ForwardState st;
    st.z.resize(static_cast<size_t>(dims.m));
    st.h.resize(static_cast<size_t>(dims.m));
    double acc = params.s;
    for (int k = 0; k < dims.m; ++k) {
        double z = params.t[static_cast<size_t>(k)];
        for (int l = 0; l < dims.n; ++l) z += params.wval(dims, k, l) * x[static_cast<size_t>(l)];
        st.z[static_cast<size_t>(k)] = z;
        st.h[static_cast<size_t>(k)] = g.value(z);
        acc += params.v[static_cast<size_t>(k)] * st.h[static_cast<size_t>(k)];
    }
    st.u = acc;
    return st;
}

// Gradient of the single output o(x) in the flattened parameters, appended
// scaled by `scale` into grad.
void accumulate_output_gradient(const Dims& dims, const Activation& f, const Activation& g,
                                const ParamVec& params, std::span<const double> x, double scale,
                                std::vector<double>& grad) {
    ForwardState st = forward_state(dims, g, params, x);
    double fp = scale * f.deriv(st.u);
    // layout: v (m), s, w (m*n row-major), t (m)
    const size_t off_s = static_cast<size_t>(dims.m);
    const size_t off_w = off_s + 1;
    const size_t off_t = off_w + static_cast<size_t>(dims.m) * dims.n;
    for (int k = 0; k < dims.m; ++k) grad[static_cast<size_t>(k)] += fp * st.h[static_cast<size_t>(k)];
    grad[off_s] += fp;
    for (int k = 0; k < dims.m; ++k) {
        double back = fp * params.v[static_cast<size_t>(k)] * g.deriv(st.z[static_cast<size_t>(k)]);
        for (int l = 0; l < dims.n; ++l)
            grad[off_w + static_cast<size_t>(k) * dims.n + l] += back * x[static_cast<size_t>(l)];
        grad[off_t + static_cast<size_t>(k)] += back;
    }
}

void check_input(const Dims& dims, std::span<const double> x) {
    if (static_cast<int>(x.size()) != dims.n)
        throw std::invalid_argument("input point has wrong dimension");
}

}  // namespace

double forward(const Dims& dims, const Activation& f, const Activation& g, const ParamVec& params,
               std::span<const double> x) {
    dims.validate();
    params.check_shapes(dims);
    check_input(dims, x);
    return f.value(forward_state(dims, g, params, x).u);
}

double quadratic_error(const Dims& dims, const Activation& f, const Activation& g,
                       const ParamVec& params, const TrainingSet& data) {
    if (data.size() != dims.p) throw std::invalid_argument("training set length differs from p");
    double sum = 0.0;
    for (int i = 0; i < data.size(); ++i) {
        double r = data.zeta[static_cast<size_t>(i)] -
                   forward(dims, f, g, params, data.gamma[static_cast<size_t>(i)]);
        sum += r * r;
    }
    return sum;
}

std::vector<double> error_gradient(const Dims& dims, const Activation& f, const Activation& g,
                                   const ParamVec& params, const TrainingSet& data) {
    dims.validate();
    params.check_shapes(dims);
    if (data.size() != dims.p) throw std::invalid_argument("training set length differs from p");
    std::vector<double> grad(static_cast<size_t>(dims.q()), 0.0);
    for (int i = 0; i < data.size(); ++i) {
        const auto& x = data.gamma[static_cast<size_t>(i)];
        double o = forward(dims, f, g, params, x);
        double residual_factor = 2.0 * (o - data.zeta[static_cast<size_t>(i)]);
        accumulate_output_gradient(dims, f, g, params, x, residual_factor, grad);
    }
    return grad;
}

std::vector<double> theta(const Dims& dims, const Activation& f, const Activation& g,
                          const std::vector<std::vector<double>>& gammas, const ParamVec& params) {
    if (static_cast<int>(gammas.size()) != dims.p)
        throw std::invalid_argument("gamma count differs from p");
    std::vector<double> out(gammas.size());
    for (size_t i = 0; i < gammas.size(); ++i) out[i] = forward(dims, f, g, params, gammas[i]);
    return out;
}

Mat theta_jacobian(const Dims& dims, const Activation& f, const Activation& g,
                   const std::vector<std::vector<double>>& gammas, const ParamVec& params) {
    dims.validate();
    params.check_shapes(dims);
    if (static_cast<int>(gammas.size()) != dims.p)
        throw std::invalid_argument("gamma count differs from p");
    const size_t q = static_cast<size_t>(dims.q());
    Mat jac(gammas.size(), q);
    std::vector<double> row(q);
    for (size_t i = 0; i < gammas.size(); ++i) {
        std::fill(row.begin(), row.end(), 0.0);
        accumulate_output_gradient(dims, f, g, params, gammas[i], 1.0, row);
        for (size_t j = 0; j < q; ++j) jac(i, j) = row[j];
    }
    return jac;
}

ParamVec beta(const Dims& dims, std::span<const double> rho, double v1) {
    dims.validate();
    check_input(dims, rho);
    ParamVec out = ParamVec::zeros(dims);
    out.v[0] = v1;
    for (int l = 0; l < dims.n; ++l) out.w[static_cast<size_t>(l)] = rho[static_cast<size_t>(l)];
    return out;
}

std::vector<double> beta_tangent(const Dims& dims, const Activation& f, const Activation& g,
                                 std::span<const double> rho,
                                 const std::vector<std::vector<double>>& gammas) {
    dims.validate();
    check_input(dims, rho);
    if (static_cast<int>(gammas.size()) != dims.p)
        throw std::invalid_argument("gamma count differs from p");
    double fp0 = f.deriv(0.0);
    std::vector<double> out(gammas.size());
    for (size_t i = 0; i < gammas.size(); ++i) out[i] = fp0 * g.value(dot(rho, gammas[i]));
    return out;
}

}  // namespace learnlab
