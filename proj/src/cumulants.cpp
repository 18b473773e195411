#include "cumulants.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace oy {

namespace {

std::int64_t factorial(int n) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

std::int64_t binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    std::int64_t num = 1, den = 1;
    for (int i = 0; i < r; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

SetPartition from_rgs(std::span<const int> rgs) {
    SetPartition p;
    p.k = static_cast<int>(rgs.size());
    int max_label = -1;
    for (int label : rgs) max_label = std::max(max_label, label);
    p.blocks.assign(max_label + 1, {});
    for (int i = 0; i < p.k; ++i) p.blocks[rgs[i]].push_back(i + 1);
    return p;
}

}  // namespace

void enumerate_partitions(int k, const std::function<void(const SetPartition&)>& visit) {
    if (k < 1 || k > 10)
        throw std::length_error("partition enumeration supports 1 <= k <= 10");
    // Restricted growth strings: rgs[0] = 0 and rgs[i] <= 1 + max(rgs[0..i-1]).
    std::vector<int> rgs(k, 0);
    std::function<void(int, int)> rec = [&](int i, int max_so_far) {
        if (i == k) {
            visit(from_rgs(rgs));
            return;
        }
        for (int label = 0; label <= max_so_far + 1; ++label) {
            rgs[i] = label;
            rec(i + 1, std::max(max_so_far, label));
        }
    };
    rec(1, 0);
}

double joint_cumulant(const std::function<double(const std::vector<int>&)>& moment_oracle,
                      int k) {
    double total = 0.0;
    enumerate_partitions(k, [&](const SetPartition& pi) {
        const int blocks = static_cast<int>(pi.blocks.size());
        double prod = 1.0;
        for (const auto& block : pi.blocks) prod *= moment_oracle(block);
        const double sign = (blocks - 1) % 2 == 0 ? 1.0 : -1.0;
        total += sign * static_cast<double>(factorial(blocks - 1)) * prod;
    });
    return total;
}

std::vector<FormulaTerm> build_theorem_rhs(int k) {
    if (k < 2 || k > 6) throw std::invalid_argument("identity assembly supports 2 <= k <= 6");
    std::vector<FormulaTerm> terms;
    enumerate_partitions(k, [&](const SetPartition& pi) {
        for (const auto& block : pi.blocks)
            if (block.size() == 1) return;  // partitions with singletons drop out
        const int blocks = static_cast<int>(pi.blocks.size());
        const std::int64_t base =
            factorial(blocks - 1) * (blocks % 2 == 0 ? 1 : -1);  // (|pi|-1)! (-1)^|pi|
        for (int j = 1; j <= k - 1; ++j) {
            FormulaTerm term;
            term.j = j;
            term.partition = pi;
            term.coefficient = base * binomial(k, j);
            bool dead = false;
            for (const auto& block : pi.blocks) {
                BlockFactor f;
                for (int idx : block)
                    if (idx <= j) ++f.a;
                f.b = static_cast<int>(block.size()) - f.a;
                if (f.a == 0) {  // block contained in {j+1..k}
                    dead = true;
                    break;
                }
                term.factors.push_back(f);
            }
            if (!dead) terms.push_back(std::move(term));
        }
    });
    return terms;
}

std::vector<HermiteExpansionTerm> hermite_to_quenched(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("negative expansion orders");
    if (a == 0) {
        // E[H_{b,t}(B_0(t))] = delta_{b,0}.
        if (b != 0) throw std::invalid_argument("hermite_to_quenched requires a >= 1 or b == 0");
        return {HermiteExpansionTerm{1, {}}};
    }
    std::vector<HermiteExpansionTerm> out;
    const std::int64_t b_fact = factorial(b);
    const std::int64_t sign = b % 2 == 0 ? 1 : -1;
    std::vector<int> ells(a, 0);
    // Enumerate compositions of b into a nonnegative parts.
    std::function<void(int, int)> rec = [&](int slot, int remaining) {
        if (slot == a - 1) {
            ells[slot] = remaining;
            std::int64_t denom = 1;
            for (int e : ells) denom *= factorial(e);
            out.push_back({sign * (b_fact / denom), ells});
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            ells[slot] = e;
            rec(slot + 1, remaining - e);
        }
    };
    rec(0, b);
    return out;
}

QuenchedPolynomial theorem_rhs_as_quenched(int k) {
    QuenchedPolynomial poly;
    for (const auto& term : build_theorem_rhs(k)) {
        // Expand the product of block factors distributively.
        std::vector<std::pair<std::int64_t, QuenchedMonomial>> partial = {{term.coefficient, {}}};
        for (const auto& f : term.factors) {
            std::vector<std::pair<std::int64_t, QuenchedMonomial>> grown;
            for (const auto& expansion : hermite_to_quenched(f.a, f.b)) {
                QuenchedAtom atom;
                for (int e : expansion.ells) {
                    if (e == 0)
                        ++atom.z;
                    else
                        atom.ells.push_back(e);
                }
                std::sort(atom.ells.begin(), atom.ells.end());
                for (const auto& [coeff, monomial] : partial) {
                    QuenchedMonomial next = monomial;
                    next.push_back(atom);
                    grown.emplace_back(coeff * expansion.coefficient, std::move(next));
                }
            }
            partial = std::move(grown);
        }
        for (auto& [coeff, monomial] : partial) {
            std::sort(monomial.begin(), monomial.end());
            poly[monomial] += coeff;
        }
    }
    std::erase_if(poly, [](const auto& kv) { return kv.second == 0; });
    return poly;
}

QuenchedPolynomial closed_form_quenched(int k) {
    // Atoms: E[A^z kappa_{ells}] with A the centered free energy.
    const auto atom = [](int z, std::vector<int> ells) {
        QuenchedAtom a;
        a.z = z;
        a.ells = std::move(ells);
        std::sort(a.ells.begin(), a.ells.end());
        return a;
    };
    QuenchedPolynomial poly;
    if (k == 2) {
        // Var(log Z) - n psi_1 + t = 2 E[E[s_0^+]]
        poly[{atom(0, {1})}] = 2;
        return poly;
    }
    if (k == 3) {
        // kappa_3 + n psi_2 = 6 E[A E[s_0^+]] - 3 E[Var(s_0^+)]
        poly[{atom(1, {1})}] = 6;
        poly[{atom(0, {2})}] = -3;
        return poly;
    }
    if (k == 4) {
        // kappa_4 - n psi_3 = 4 E[kappa_3(s_0^+)] + 12 Cov(E[s_0^+], A^2)
        //                    - 12 Var(E[s_0^+]) - 12 E[Var(s_0^+) A]
        poly[{atom(0, {3})}] = 4;
        poly[{atom(2, {1})}] = 12;
        poly[{atom(2, {}), atom(0, {1})}] = -12;
        poly[{atom(0, {1, 1})}] = -12;
        QuenchedMonomial sq = {atom(0, {1}), atom(0, {1})};
        std::sort(sq.begin(), sq.end());
        poly[sq] = 12;
        poly[{atom(1, {2})}] = -12;
        return poly;
    }
    throw std::invalid_argument("closed forms are provided for k in {2,3,4}");
}

std::string dump_terms(std::span<const FormulaTerm> terms) {
    std::ostringstream os;
    for (const auto& term : terms) {
        os << "j=" << term.j << " coeff=" << term.coefficient << " pi=";
        for (const auto& block : term.partition.blocks) {
            os << '{';
            for (std::size_t i = 0; i < block.size(); ++i) {
                if (i) os << ',';
                os << block[i];
            }
            os << '}';
        }
        os << " factors=";
        for (const auto& f : term.factors) os << "(a=" << f.a << ",b=" << f.b << ")";
        os << '\n';
    }
    return os.str();
}

KStatistics k_statistics(std::span<const double> samples) {
    const auto n_sz = samples.size();
    if (n_sz < 2) throw std::invalid_argument("k_statistics needs at least two samples");
    const double n = static_cast<double>(n_sz);

    double mean = 0.0;
    for (double x : samples) mean += x;
    mean /= n;

    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    bool all_equal = true;
    for (double x : samples) {
        const double d = x - mean;
        const double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
        all_equal = all_equal && x == samples[0];
    }
    m2 /= n;
    m3 /= n;
    m4 /= n;

    KStatistics ks;
    ks.degenerate = all_equal;
    ks.k1 = mean;
    ks.k2 = n / (n - 1.0) * m2;
    if (n_sz > 2) ks.k3 = n * n / ((n - 1.0) * (n - 2.0)) * m3;
    if (n_sz > 3)
        ks.k4 = n * n * ((n + 1.0) * m4 - 3.0 * (n - 1.0) * m2 * m2) /
                ((n - 1.0) * (n - 2.0) * (n - 3.0));
    if (all_equal) {
        ks.k2 = ks.k3 = ks.k4 = 0.0;
    }
    return ks;
}

std::int64_t bell_number(int k) {
    std::int64_t count = 0;
    enumerate_partitions(k, [&](const SetPartition&) { ++count; });
    return count;
}

}  // namespace oy
