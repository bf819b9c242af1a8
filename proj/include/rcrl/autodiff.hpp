#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace rcrl::ad {

class Tape;

/// Scalar on a gradient tape. A Var with tape == nullptr is an untracked
/// constant; mixed constant/tracked arithmetic stays off the tape where it
/// can. Vars are cheap value types (pointer + index + cached value).
struct Var {
    Tape* tape = nullptr;
    std::int32_t idx = -1;
    double v = 0.0;

    Var() = default;
    Var(Tape* t, std::int32_t i, double value) : tape(t), idx(i), v(value) {}
    /*implicit*/ Var(double c) : v(c) {}

    double value() const { return v; }
    bool tracked() const { return tape != nullptr; }
};

class Tape {
  public:
    Var leaf(double value) {
        nodes_.push_back(Node{{0.0, 0.0}, {-1, -1}});
        return Var{this, static_cast<std::int32_t>(nodes_.size() - 1), value};
    }

    Var unary(const Var& a, double w, double value) {
        nodes_.push_back(Node{{w, 0.0}, {a.idx, -1}});
        return Var{this, static_cast<std::int32_t>(nodes_.size() - 1), value};
    }

    Var binary(const Var& a, const Var& b, double wa, double wb, double value) {
        nodes_.push_back(Node{{wa, wb}, {a.idx, b.idx}});
        return Var{this, static_cast<std::int32_t>(nodes_.size() - 1), value};
    }

    std::size_t size() const { return nodes_.size(); }

    /// Adjoint sweep from `root`; returns d root / d node for every node.
    std::vector<double> adjoints(const Var& root) const {
        std::vector<double> adj(nodes_.size(), 0.0);
        if (!root.tracked()) return adj;
        adj[static_cast<std::size_t>(root.idx)] = 1.0;
        for (std::size_t i = nodes_.size(); i-- > 0;) {
            const double a = adj[i];
            if (a == 0.0) continue;
            const Node& n = nodes_[i];
            if (n.parent[0] >= 0) adj[static_cast<std::size_t>(n.parent[0])] += n.weight[0] * a;
            if (n.parent[1] >= 0) adj[static_cast<std::size_t>(n.parent[1])] += n.weight[1] * a;
        }
        return adj;
    }

  private:
    struct Node {
        double weight[2];
        std::int32_t parent[2];
    };
    std::vector<Node> nodes_;
};

// ---- arithmetic ----

inline Var operator+(const Var& a, const Var& b) {
    const double v = a.v + b.v;
    if (a.tracked() && b.tracked()) return a.tape->binary(a, b, 1.0, 1.0, v);
    if (a.tracked()) return a.tape->unary(a, 1.0, v);
    if (b.tracked()) return b.tape->unary(b, 1.0, v);
    return Var{v};
}

inline Var operator-(const Var& a, const Var& b) {
    const double v = a.v - b.v;
    if (a.tracked() && b.tracked()) return a.tape->binary(a, b, 1.0, -1.0, v);
    if (a.tracked()) return a.tape->unary(a, 1.0, v);
    if (b.tracked()) return b.tape->unary(b, -1.0, v);
    return Var{v};
}

inline Var operator-(const Var& a) {
    if (a.tracked()) return a.tape->unary(a, -1.0, -a.v);
    return Var{-a.v};
}

inline Var operator*(const Var& a, const Var& b) {
    const double v = a.v * b.v;
    if (a.tracked() && b.tracked()) return a.tape->binary(a, b, b.v, a.v, v);
    if (a.tracked()) return a.tape->unary(a, b.v, v);
    if (b.tracked()) return b.tape->unary(b, a.v, v);
    return Var{v};
}

inline Var operator/(const Var& a, const Var& b) {
    const double v = a.v / b.v;
    if (a.tracked() && b.tracked()) return a.tape->binary(a, b, 1.0 / b.v, -v / b.v, v);
    if (a.tracked()) return a.tape->unary(a, 1.0 / b.v, v);
    if (b.tracked()) return b.tape->unary(b, -v / b.v, v);
    return Var{v};
}

inline Var& operator+=(Var& a, const Var& b) { a = a + b; return a; }
inline Var& operator-=(Var& a, const Var& b) { a = a - b; return a; }
inline Var& operator*=(Var& a, const Var& b) { a = a * b; return a; }
inline Var& operator/=(Var& a, const Var& b) { a = a / b; return a; }

inline Var exp(const Var& a) {
    const double v = std::exp(a.v);
    if (a.tracked()) return a.tape->unary(a, v, v);
    return Var{v};
}

inline Var log(const Var& a) {
    const double v = std::log(a.v);
    if (a.tracked()) return a.tape->unary(a, 1.0 / a.v, v);
    return Var{v};
}

inline Var tanh(const Var& a) {
    const double v = std::tanh(a.v);
    if (a.tracked()) return a.tape->unary(a, 1.0 - v * v, v);
    return Var{v};
}

inline Var sqrt(const Var& a) {
    const double v = std::sqrt(a.v);
    if (a.tracked()) return a.tape->unary(a, 0.5 / v, v);
    return Var{v};
}

/// log(max(x, floor)); the flat branch has zero derivative.
inline Var log_floored(const Var& a, double floor) {
    if (a.v < floor) {
        if (a.tracked()) return a.tape->unary(a, 0.0, std::log(floor));
        return Var{std::log(floor)};
    }
    return log(a);
}

inline double log_floored(double a, double floor) { return std::log(a < floor ? floor : a); }

/// Hard clamp; derivative is 1 inside, 0 outside.
inline Var clamp(const Var& a, double lo, double hi) {
    if (a.v < lo) return a.tracked() ? a.tape->unary(a, 0.0, lo) : Var{lo};
    if (a.v > hi) return a.tracked() ? a.tape->unary(a, 0.0, hi) : Var{hi};
    return a;
}

inline double clamp(double a, double lo, double hi) { return a < lo ? lo : (a > hi ? hi : a); }

/// Bundles a tape with lazily created parameter leaves; the gradient vector
/// comes back aligned with theta, with zeros for untouched parameters.
class ParamTape {
  public:
    explicit ParamTape(std::span<const double> theta)
        : theta_(theta), leaf_(theta.size(), -1) {}

    Var param(std::size_t k) {
        if (leaf_[k] < 0) {
            Var l = tape_.leaf(theta_[k]);
            leaf_[k] = l.idx;
            return l;
        }
        return Var{&tape_, leaf_[k], theta_[k]};
    }

    Var constant(double c) const { return Var{c}; }

    Tape& tape() { return tape_; }

    std::vector<double> gradient(const Var& loss) const {
        const std::vector<double> adj = tape_.adjoints(loss);
        std::vector<double> g(theta_.size(), 0.0);
        for (std::size_t k = 0; k < theta_.size(); ++k)
            if (leaf_[k] >= 0) g[k] = adj[static_cast<std::size_t>(leaf_[k])];
        return g;
    }

  private:
    std::span<const double> theta_;
    std::vector<std::int32_t> leaf_;
    Tape tape_;
};

/// Evaluates `build(pt)` and returns (loss value, dloss/dtheta).
template <class F>
std::pair<double, std::vector<double>> value_and_grad(std::span<const double> theta, F&& build) {
    ParamTape pt(theta);
    Var loss = build(pt);
    return {loss.value(), pt.gradient(loss)};
}

// Param accessors letting model forwards run either on plain doubles or on
// the tape, from one templated implementation.

struct DoubleParams {
    using S = double;
    std::span<const double> theta;
    double param(std::size_t k) const { return theta[k]; }
    double constant(double c) const { return c; }
};

struct VarParams {
    using S = Var;
    ParamTape* pt;
    Var param(std::size_t k) const { return pt->param(k); }
    Var constant(double c) const { return Var{c}; }
};

}  // namespace rcrl::ad
