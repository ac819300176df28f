#ifndef GPACK_CONDITIONS_HPP
#define GPACK_CONDITIONS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpack/rational.hpp"

namespace gpack {

// ---- alpha* ------------------------------------------------------------------

// alpha*(t, Delta2) = (2 + gamma + sqrt(4 gamma + gamma^2)) / 2 with
// gamma = Delta2/(Delta2+1) * (t-1)/t; the larger root of
// (alpha-1)^2 - gamma*alpha = 0. Lies in [(9+sqrt(17))/8, (3+sqrt(5))/2].
struct AlphaStar {
    int t = 0;
    long long delta2 = 0;
    Rational gamma;
    double value = 0.0;
};

inline Rational alpha_star_gamma(int t, long long delta2) {
    if (t < 2) throw std::invalid_argument("alpha_star: t must be >= 2");
    if (delta2 < 0) throw std::invalid_argument("alpha_star: delta2 must be nonnegative");
    return Rational(delta2, delta2 + 1) * Rational(t - 1, t);
}

inline AlphaStar alpha_star(int t, long long delta2) {
    if (delta2 < 1) throw std::invalid_argument("alpha_star: delta2 must be >= 1");
    AlphaStar a;
    a.t = t;
    a.delta2 = delta2;
    a.gamma = alpha_star_gamma(t, delta2);
    const double g = a.gamma.to_double();
    a.value = (2.0 + g + std::sqrt(4.0 * g + g * g)) / 2.0;
    return a;
}

namespace detail {

template <class Num>
Num num_from(const Rational& r) {
    return Num(r);
}
template <>
inline double num_from<double>(const Rational& r) {
    return r.to_double();
}

} // namespace detail

// exact test for alpha > alpha*(t, delta2): alpha lies strictly right of the
// larger root of (x-1)^2 - gamma*x, i.e. the quadratic is positive at alpha
// and alpha is right of the vertex (2+gamma)/2
template <class Num>
bool exceeds_alpha_star(const Num& alpha, int t, long long delta2) {
    const Num g = detail::num_from<Num>(alpha_star_gamma(t, delta2));
    const Num q = (alpha - Num(1)) * (alpha - Num(1)) - g * alpha;
    return q > Num(0) && Num(2) * alpha > Num(2) + g;
}

// ---- theorem quantities --------------------------------------------------------
//
// The four upper bounds of the first packing theorem and the two of the
// second, evaluated verbatim. Note the first quantity's denominator is
// (alpha-1)^2 - alpha (not gamma*alpha); parameters that make it
// nonpositive are rejected.

template <class Num>
std::array<Num, 4> thm1_quantities(int t, const Num& alpha, const Num& epsilon,
                                   long long delta1, long long delta2) {
    if (t < 2) throw std::invalid_argument("thm1_quantities: t must be >= 2");
    if (delta1 < 0 || delta2 < 0)
        throw std::invalid_argument("thm1_quantities: negative max degree");
    if (!(epsilon > Num(0)) || !(Num(2) * epsilon < Num(1)))
        throw std::invalid_argument("thm1_quantities: epsilon outside (0, 1/2)");
    const Num denom = (alpha - Num(1)) * (alpha - Num(1)) - alpha;
    if (!(denom > Num(0)))
        throw std::invalid_argument("thm1_quantities: (alpha-1)^2 - alpha must be positive");

    const Num d1(delta1), d2(delta2), tt(t);
    const Num frac = alpha * (alpha - Num(1)) / denom;
    std::array<Num, 4> q;
    q[0] = (tt + frac) * d2 + d1 * d2;
    q[1] = (Num(2) * alpha * tt + Num(2)) * d2 +
           ((Num(2) * alpha + Num(1)) * tt - Num(1)) * d2 * d2 + (Num(1) - epsilon) * d1 * d2;
    q[2] = Num(1) + (Num(2) + epsilon / (Num(1) - Num(2) * epsilon)) * d2 + d1 * d2;
    q[3] = (tt + (Num(3) - epsilon) / Num(2)) * d2 +
           (Num(3) - epsilon) / Num(2) * (tt - Num(1)) * d2 * d2 +
           (Num(1) + epsilon) / Num(2) * d1 * d2;
    return q;
}

template <class Num>
std::array<Num, 2> thm2_quantities(int t, int s, const Num& alpha, long long delta1,
                                   long long delta2) {
    if (t < 2) throw std::invalid_argument("thm2_quantities: t must be >= 2");
    if (s < 1) throw std::invalid_argument("thm2_quantities: s must be >= 1");
    if (delta1 < 0 || delta2 < 0)
        throw std::invalid_argument("thm2_quantities: negative max degree");
    const Num denom = (alpha - Num(1)) * (alpha - Num(1)) - alpha;
    if (!(denom > Num(0)))
        throw std::invalid_argument("thm2_quantities: (alpha-1)^2 - alpha must be positive");

    const Num d1(delta1), d2(delta2), tt(t);
    const Num frac = alpha * (alpha - Num(1)) / denom;
    std::array<Num, 2> q;
    q[0] = (tt + frac) * d2 + d1 * d2;
    q[1] = (Num(2) + Num(2) * alpha * tt) * d2 + Num(s - 1) * d1 +
           ((Num(2) * alpha + Num(1)) * tt - Num(1)) * d2 * d2;
    return q;
}

// ---- corollary parameter choices ------------------------------------------------

inline Rational corollary3_epsilon(int t) {
    if (t < 2) throw std::invalid_argument("corollary3_epsilon: t must be >= 2");
    return Rational(2 * t - 2, 4 * t - 3);
}

// alpha = (6t + 1 + sqrt(20t^2 + 4t + 1)) / (4t), the root of
// 2t*a^2 - (6t+1)*a + (2t+1) that makes
// t + a(a-1)/((a-1)^2 - a) equal (2a+1)t exactly
inline QuadExt corollary5_alpha(int t) {
    if (t < 2) throw std::invalid_argument("corollary5_alpha: t must be >= 2");
    const long long d = 20ll * t * t + 4ll * t + 1;
    return QuadExt(Rational(6ll * t + 1, 4ll * t), Rational(1, 4ll * t), d);
}

// ---- literal condition predicates ------------------------------------------------

inline bool sauer_spencer_applies(long long n, long long delta1, long long delta2) {
    return 2 * (__int128)delta1 * delta2 < (__int128)n;
}

inline bool bec_condition(long long n, long long delta1, long long delta2) {
    return ((__int128)delta1 + 1) * ((__int128)delta2 + 1) <= (__int128)n + 1;
}

// Delta1 > (4 + sqrt(5)) * t * Delta2, decided by squaring
inline bool exceeds_4_plus_sqrt5(long long delta1, int t, long long delta2) {
    const __int128 lhs = (__int128)delta1 - 4 * (__int128)t * delta2;
    if (lhs <= 0) return false;
    return lhs * lhs > 5 * (__int128)t * t * delta2 * delta2;
}

inline bool corollary3_applies(long long n, long long delta1, long long delta2, long long codeg1,
                               int t) {
    if (t < 2) throw std::invalid_argument("corollary3_applies: t must be >= 2");
    return (__int128)delta1 * delta2 + delta1 <= (__int128)n + 1 && codeg1 < t &&
           delta1 > 17ll * t * delta2;
}

inline bool corollary5_applies(long long n, long long delta1, long long delta2, long long codeg1,
                               bool triangle_free2, int t) {
    if (t < 2) throw std::invalid_argument("corollary5_applies: t must be >= 2");
    return bec_condition(n, delta1, delta2) && codeg1 < t && triangle_free2 &&
           exceeds_4_plus_sqrt5(delta1, t, delta2);
}

// ---- Corradi bounds ---------------------------------------------------------------

// lower bound k^2 N / (k + (N-1)(t-1)) on the union of N k-element sets
// with pairwise intersections at most t-1
inline Rational corradi_lower_bound(long long k, long long N, long long t) {
    if (k < 1 || N < 1 || t < 1) throw std::invalid_argument("corradi_lower_bound: bad arguments");
    return Rational(k * k * N, k + (N - 1) * (t - 1));
}

// upper bound |X| (k - (t-1)) / (k^2 - (t-1) |X|) on the number of size->=k
// subsets of X with pairwise intersections at most t-1; requires
// k^2 > (t-1) |X|
inline Rational corcor_max_N(long long sizeX, long long k, long long t) {
    if (sizeX < 0 || k < 1 || t < 1) throw std::invalid_argument("corcor_max_N: bad arguments");
    const long long denom = k * k - (t - 1) * sizeX;
    if (denom <= 0)
        throw std::invalid_argument("corcor_max_N: requires k^2 > (t-1)|X|");
    return Rational(sizeX * (k - (t - 1)), denom);
}

// ---- existential theorem application ----------------------------------------------
//
// The theorems quantify existentially over (alpha, epsilon). The search
// minimizes max(Q_i) by a coarse logarithmic grid plus Nelder-Mead-style
// refinement in floating point, then re-verifies the minimizer (and a few
// nearby rationalizations, plus the corollary choices) in exact arithmetic.
// holds = true only on an exact certificate.

struct QuantityValue {
    std::string label;
    double approx = 0.0;
    std::string exact; // empty when only a float evaluation exists
    bool is_exact = false;
};

struct ConditionEntry {
    std::string name;
    bool holds = false;
    std::map<std::string, std::string> params;
    std::vector<QuantityValue> quantities;
    std::string binding;
};

namespace detail {

// best rational approximation with denominator <= max_den (continued fractions)
inline Rational rationalize(double x, long long max_den) {
    if (!std::isfinite(x)) throw std::invalid_argument("rationalize: non-finite");
    const bool neg = x < 0;
    double v = neg ? -x : x;
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int it = 0; it < 64; ++it) {
        const double fl = std::floor(v);
        if (fl > 9e17) break;
        const long long a = (long long)fl;
        if (q1 > 0 && (double)a * q1 + q0 > (double)max_den) break;
        const long long p2 = a * p1 + p0, q2 = a * q1 + q0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        const double frac = v - fl;
        if (frac < 1e-15) break;
        v = 1.0 / frac;
    }
    if (q1 == 0) return Rational(0);
    return Rational(neg ? -p1 : p1, q1);
}

struct SearchPoint {
    double alpha = 0.0;
    double epsilon = 0.0;
    double value = std::numeric_limits<double>::infinity();
};

// minimal domain for the printed quantity (1): (alpha-1)^2 - alpha > 0
inline constexpr double kAlphaDomainMin = 2.6180339887498949; // (3+sqrt(5))/2

template <class Eval>
SearchPoint grid_then_simplex(int t, long long delta2, bool with_epsilon, Eval&& eval) {
    const double gamma = alpha_star_gamma(t, delta2).to_double();
    const double astar = (2.0 + gamma + std::sqrt(4.0 * gamma + gamma * gamma)) / 2.0;

    SearchPoint best;
    const int kGrid = 64;
    for (int i = 0; i < kGrid; ++i) {
        // log-spaced offsets 1e-6 .. 8 above alpha*
        const double off = 1e-6 * std::pow(8e6, double(i) / (kGrid - 1));
        const double alpha = astar + off;
        if (alpha * alpha - 3 * alpha + 1 <= 0) continue;
        if (with_epsilon) {
            for (int j = 0; j < kGrid; ++j) {
                const double eps = 1e-3 * std::pow(499.0, double(j) / (kGrid - 1));
                const double v = eval(alpha, eps);
                if (v < best.value) best = {alpha, eps, v};
            }
        } else {
            const double v = eval(alpha, 0.25);
            if (v < best.value) best = {alpha, 0.25, v};
        }
    }
    if (!std::isfinite(best.value)) return best;

    // Nelder-Mead-style refinement, clamped to the admissible box
    auto clamp_eval = [&](double a, double e) {
        a = std::max(a, std::max(astar, kAlphaDomainMin) + 1e-9);
        e = std::min(std::max(e, 1e-9), 0.5 - 1e-9);
        return eval(a, e);
    };
    double step_a = std::max(0.05, best.alpha * 0.05);
    double step_e = 0.02;
    for (int round = 0; round < 60; ++round) {
        bool improved = false;
        const double candidates[4][2] = {{best.alpha + step_a, best.epsilon},
                                         {best.alpha - step_a, best.epsilon},
                                         {best.alpha, best.epsilon + step_e},
                                         {best.alpha, best.epsilon - step_e}};
        const int ncand = with_epsilon ? 4 : 2;
        for (int c = 0; c < ncand; ++c) {
            double a = std::max(candidates[c][0], std::max(astar, kAlphaDomainMin) + 1e-9);
            double e = std::min(std::max(candidates[c][1], 1e-9), 0.5 - 1e-9);
            const double v = clamp_eval(a, e);
            if (v < best.value) {
                best = {a, e, v};
                improved = true;
            }
        }
        if (!improved) {
            step_a *= 0.5;
            step_e *= 0.5;
            if (step_a < 1e-10 && step_e < 1e-10) break;
        }
    }
    return best;
}

} // namespace detail

// Theorem-1 application: codegree hypothesis plus an exactly verified
// admissible (alpha, epsilon) with n > max(Q1..Q4).
inline ConditionEntry thm1_applies(long long n, long long delta1, long long delta2,
                                   long long codeg1, int t) {
    ConditionEntry e;
    e.name = "thm1";
    e.params["t"] = std::to_string(t);
    if (t < 2) throw std::invalid_argument("thm1_applies: t must be >= 2");
    if (codeg1 >= t) {
        e.binding = "codegree hypothesis fails (codeg1 >= t)";
        return e;
    }

    auto eval_f = [&](double a, double eps) {
        const double denom = (a - 1) * (a - 1) - a;
        if (denom <= 0 || eps <= 0 || eps >= 0.5) return std::numeric_limits<double>::infinity();
        const auto q = thm1_quantities<double>(t, a, eps, delta1, delta2);
        return *std::max_element(q.begin(), q.end());
    };
    const detail::SearchPoint best = detail::grid_then_simplex(t, delta2, true, eval_f);

    // candidate exact parameter pairs, best float minimizer first
    std::vector<std::pair<Rational, Rational>> candidates;
    if (std::isfinite(best.value)) {
        for (long long den : {1000000ll, 10000ll, 100ll}) {
            candidates.emplace_back(detail::rationalize(best.alpha, den),
                                    detail::rationalize(best.epsilon, den));
        }
    }
    candidates.emplace_back(Rational(3), corollary3_epsilon(t)); // corollary choice

    for (const auto& [alpha, eps] : candidates) {
        if (!(eps > Rational(0)) || !(Rational(2) * eps < Rational(1))) continue;
        if (!((alpha - 1) * (alpha - 1) - alpha > Rational(0))) continue;
        if (!exceeds_alpha_star(alpha, t, delta2)) continue;
        const auto q = thm1_quantities<Rational>(t, alpha, eps, delta1, delta2);
        const Rational worst = *std::max_element(q.begin(), q.end());
        if (Rational(n) > worst) {
            e.holds = true;
            e.params["alpha"] = alpha.to_string();
            e.params["epsilon"] = eps.to_string();
            for (int i = 0; i < 4; ++i) {
                e.quantities.push_back({"Q" + std::to_string(i + 1), q[std::size_t(i)].to_double(),
                                        q[std::size_t(i)].to_string(), true});
            }
            e.binding = "max quantity " + worst.to_string() + " < n";
            return e;
        }
    }
    e.binding = "no admissible (alpha, epsilon) with n > max(Q1..Q4)";
    if (std::isfinite(best.value)) {
        e.params["alpha"] = std::to_string(best.alpha);
        e.params["epsilon"] = std::to_string(best.epsilon);
        const auto q = thm1_quantities<double>(t, best.alpha, best.epsilon, delta1, delta2);
        for (int i = 0; i < 4; ++i)
            e.quantities.push_back({"Q" + std::to_string(i + 1), q[std::size_t(i)], "", false});
    }
    return e;
}

// Theorem-2 application: both codegree hypotheses plus an exactly verified
// admissible alpha with n > max(Q5, Q6). The corollary-5 alpha is checked
// in the quadratic extension field, so irrational candidates stay exact.
inline ConditionEntry thm2_applies(long long n, long long delta1, long long delta2,
                                   long long codeg1, long long adjcodeg2, int t, int s) {
    ConditionEntry e;
    e.name = "thm2";
    e.params["t"] = std::to_string(t);
    e.params["s"] = std::to_string(s);
    if (t < 2) throw std::invalid_argument("thm2_applies: t must be >= 2");
    if (s < 1) throw std::invalid_argument("thm2_applies: s must be >= 1");
    if (codeg1 >= t) {
        e.binding = "codegree hypothesis fails (codeg1 >= t)";
        return e;
    }
    if (adjcodeg2 >= s) {
        e.binding = "adjacent-codegree hypothesis fails (adjcodeg2 >= s)";
        return e;
    }

    auto eval_f = [&](double a, double) {
        const double denom = (a - 1) * (a - 1) - a;
        if (denom <= 0) return std::numeric_limits<double>::infinity();
        const auto q = thm2_quantities<double>(t, s, a, delta1, delta2);
        return std::max(q[0], q[1]);
    };
    const detail::SearchPoint best = detail::grid_then_simplex(t, delta2, false, eval_f);

    auto accept = [&](const auto& alpha, const std::string& alpha_str) -> bool {
        using Num = std::decay_t<decltype(alpha)>;
        if (!((alpha - Num(1)) * (alpha - Num(1)) - alpha > Num(0))) return false;
        if (!exceeds_alpha_star(alpha, t, delta2)) return false;
        const auto q = thm2_quantities<Num>(t, s, alpha, delta1, delta2);
        const Num worst = std::max(q[0], q[1]);
        if (!(Num(n) > worst)) return false;
        e.holds = true;
        e.params["alpha"] = alpha_str;
        e.quantities.push_back({"Q5", q[0].to_double(), q[0].to_string(), true});
        e.quantities.push_back({"Q6", q[1].to_double(), q[1].to_string(), true});
        e.binding = "max quantity " + worst.to_string() + " < n";
        return true;
    };

    if (std::isfinite(best.value)) {
        for (long long den : {1000000ll, 10000ll, 100ll}) {
            const Rational alpha = detail::rationalize(best.alpha, den);
            if (accept(alpha, alpha.to_string())) return e;
        }
    }
    {
        const QuadExt alpha = corollary5_alpha(t);
        if (accept(alpha, alpha.to_string())) return e;
    }
    e.binding = "no admissible alpha with n > max(Q5, Q6)";
    if (std::isfinite(best.value)) {
        e.params["alpha"] = std::to_string(best.alpha);
        const auto q = thm2_quantities<double>(t, s, best.alpha, delta1, delta2);
        e.quantities.push_back({"Q5", q[0], "", false});
        e.quantities.push_back({"Q6", q[1], "", false});
    }
    return e;
}

// ---- full verdict -----------------------------------------------------------------

struct ConditionVerdict {
    long long n = 0;
    long long delta1 = 0, delta2 = 0;
    long long codeg1 = 0, adjcodeg2 = 0;
    int t = 2, s = 1;
    std::vector<ConditionEntry> entries;

    const ConditionEntry* find(const std::string& name) const {
        for (const auto& e : entries) {
            if (e.name == name) return &e;
        }
        return nullptr;
    }
};

inline ConditionVerdict evaluate_conditions(long long n, long long delta1, long long delta2,
                                            long long codeg1, long long adjcodeg2, int t, int s) {
    ConditionVerdict v;
    v.n = n;
    v.delta1 = delta1;
    v.delta2 = delta2;
    v.codeg1 = codeg1;
    v.adjcodeg2 = adjcodeg2;
    v.t = t;
    v.s = s;

    auto literal = [](const std::string& name, bool holds, const std::string& binding) {
        ConditionEntry e;
        e.name = name;
        e.holds = holds;
        e.binding = binding;
        return e;
    };
    v.entries.push_back(literal("sauer-spencer", sauer_spencer_applies(n, delta1, delta2),
                                "2*D1*D2 < n"));
    v.entries.push_back(literal("bec", bec_condition(n, delta1, delta2), "(D1+1)(D2+1) <= n+1"));
    v.entries.push_back(literal("corollary3", corollary3_applies(n, delta1, delta2, codeg1, t),
                                "D1*D2 + D1 <= n+1, codeg1 < t, D1 > 17*t*D2"));
    v.entries.push_back(literal("corollary5",
                                corollary5_applies(n, delta1, delta2, codeg1, adjcodeg2 == 0, t),
                                "BEC premise, codeg1 < t, G2 triangle-free, D1 > (4+sqrt5)*t*D2"));
    v.entries.push_back(thm1_applies(n, delta1, delta2, codeg1, t));
    v.entries.push_back(thm2_applies(n, delta1, delta2, codeg1, adjcodeg2, t, s));
    return v;
}

} // namespace gpack

#endif
