#pragma once

// Finite-dimensional bigraded commutative algebras with conjugation and an
// integration functional: the fibre of every bundle in this project.
//
// The algebra itself is always stored exactly (Gaussian-rational structure
// constants); the ring the computations run over is chosen per call through
// the template parameter, so the same cup product works for exact scalars,
// doubles and jets.

#include <map>
#include <string>
#include <vector>

#include "kahlercone/linalg.hpp"

namespace kcone {

struct Bidegree {
    int p = 0, q = 0;
    friend bool operator==(const Bidegree& a, const Bidegree& b) { return a.p == b.p && a.q == b.q; }
    friend bool operator<(const Bidegree& a, const Bidegree& b) {
        if (a.p + a.q != b.p + b.q) return a.p + a.q < b.p + b.q;
        return a.p < b.p;
    }
    std::string str() const { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }
};

class GradedAlgebra {
public:
    struct CupEntry {
        int k;
        GaussianRational c;
    };

    // Raw construction data; create() validates everything before use.
    struct Data {
        std::string name;
        int n = 0;
        std::vector<Bidegree> bidegree_of;           // per global basis index, grouped by block
        std::vector<std::string> labels;             // per global basis index
        std::vector<std::vector<CupEntry>> cup;      // index i*rank+j
        Mat<GaussianRational> conj;                  // conj(b_l) = sum_k conj(k,l) b_k
        std::vector<GaussianRational> integral;      // functional on the top block
        std::vector<Vec<GaussianRational>> e_basis;  // global vectors in H^{1,1}
        std::vector<Rational> sample_point;          // length N
    };

    static GradedAlgebra create(Data d);  // throws InvariantError listing violations

    const std::string& name() const { return d_.name; }
    int n() const { return d_.n; }
    int rank() const { return static_cast<int>(d_.bidegree_of.size()); }
    int generators() const { return static_cast<int>(d_.e_basis.size()); }  // N
    const std::vector<Bidegree>& bidegrees() const { return d_.bidegree_of; }
    Bidegree bidegree_of(int i) const { return d_.bidegree_of[i]; }
    const std::string& label(int i) const { return d_.labels[i]; }
    const std::vector<Rational>& sample_point() const { return d_.sample_point; }
    const Data& data() const { return d_; }

    int dim(Bidegree b) const {
        auto it = blocks_.find(b);
        return it == blocks_.end() ? 0 : static_cast<int>(it->second.size());
    }
    // Global indices of one bidegree block (empty if the block is absent).
    const std::vector<int>& block(Bidegree b) const {
        static const std::vector<int> empty;
        auto it = blocks_.find(b);
        return it == blocks_.end() ? empty : it->second;
    }
    const std::map<Bidegree, std::vector<int>>& blocks() const { return blocks_; }

    int unit_index() const { return unit_index_; }
    int top_index() const { return top_index_; }

    template <class K>
    Vec<K> zero_class() const {
        return vec_zero<K>(rank());
    }
    template <class K>
    Vec<K> unit_class() const {
        Vec<K> u = zero_class<K>();
        u[unit_index_] = scalar_traits<K>::one();
        return u;
    }
    template <class K>
    Vec<K> basis_class(int i) const {
        Vec<K> u = zero_class<K>();
        u[i] = scalar_traits<K>::one();
        return u;
    }
    template <class K>
    Vec<K> e_class(int j) const {
        Vec<K> u = zero_class<K>();
        for (int i = 0; i < rank(); ++i)
            if (!d_.e_basis[j][i].is_zero()) u[i] = scalar_traits<K>::from_exact(d_.e_basis[j][i]);
        return u;
    }
    // omega(t) = sum_j t^j e_j
    template <class K>
    Vec<K> omega_at(const std::vector<K>& t) const {
        if (static_cast<int>(t.size()) != generators())
            throw InvalidArgument("point has wrong number of coordinates");
        Vec<K> w = zero_class<K>();
        for (int j = 0; j < generators(); ++j)
            for (int i = 0; i < rank(); ++i)
                if (!d_.e_basis[j][i].is_zero())
                    w[i] += t[j] * scalar_traits<K>::from_exact(d_.e_basis[j][i]);
        return w;
    }

    template <class K>
    Vec<K> cup(const Vec<K>& u, const Vec<K>& v) const {
        const int R = rank();
        Vec<K> out = zero_class<K>();
        for (int i = 0; i < R; ++i) {
            if (scalar_traits<K>::is_zero(u[i])) continue;
            for (int j = 0; j < R; ++j) {
                if (scalar_traits<K>::is_zero(v[j])) continue;
                const K uv = u[i] * v[j];
                for (const CupEntry& e : d_.cup[static_cast<size_t>(i) * R + j])
                    out[e.k] += scalar_traits<K>::from_exact(e.c) * uv;
            }
        }
        return out;
    }

    // Value of the integration functional; reads only the top-degree
    // coefficients. Callers that must reject inhomogeneous input use
    // integrate_checked below.
    template <class K>
    K integrate(const Vec<K>& u) const {
        const auto& top = block(Bidegree{d_.n, d_.n});
        K s = scalar_traits<K>::zero();
        for (size_t a = 0; a < top.size(); ++a)
            s += scalar_traits<K>::from_exact(d_.integral[a]) * u[top[a]];
        return s;
    }

    template <class K>
    K integrate_checked(const Vec<K>& u) const {
        for (int i = 0; i < rank(); ++i) {
            if (d_.bidegree_of[i].p == d_.n && d_.bidegree_of[i].q == d_.n) continue;
            if (!scalar_traits<K>::is_zero(u[i]))
                throw InvalidArgument("integrate: class not concentrated in top bidegree (component at " +
                                      d_.bidegree_of[i].str() + ")");
        }
        return integrate(u);
    }

    template <class K>
    Vec<K> conjugate(const Vec<K>& u) const {
        const int R = rank();
        Vec<K> out = zero_class<K>();
        for (int l = 0; l < R; ++l) {
            if (scalar_traits<K>::is_zero(u[l])) continue;
            const K cu = scalar_traits<K>::conj(u[l]);
            for (int k = 0; k < R; ++k)
                if (!d_.conj.at(k, l).is_zero())
                    out[k] += scalar_traits<K>::from_exact(d_.conj.at(k, l)) * cu;
        }
        return out;
    }

    // Support of a coefficient vector: bidegrees with a nonzero coefficient.
    template <class K>
    std::vector<Bidegree> support(const Vec<K>& u) const {
        std::vector<Bidegree> s;
        for (const auto& [b, idx] : blocks_) {
            for (int i : idx)
                if (!scalar_traits<K>::is_zero(u[i])) {
                    s.push_back(b);
                    break;
                }
        }
        return s;
    }
    template <class K>
    bool homogeneous(const Vec<K>& u, Bidegree* deg = nullptr) const {
        auto s = support(u);
        if (s.size() > 1) return false;
        if (deg) *deg = s.empty() ? Bidegree{0, 0} : s[0];
        return true;
    }

private:
    Data d_;
    std::map<Bidegree, std::vector<int>> blocks_;
    int unit_index_ = 0;
    int top_index_ = 0;

    explicit GradedAlgebra(Data d);
    friend std::vector<std::string> validate_algebra(const GradedAlgebra&);
    static GradedAlgebra create_unchecked(Data d) { return GradedAlgebra(std::move(d)); }
};

// A coefficient vector bound to its algebra; the error-checked public face of
// the ring operations.
template <class K>
struct CohomClass {
    const GradedAlgebra* algebra = nullptr;
    Vec<K> coeff;

    static CohomClass basis(const GradedAlgebra& A, int i) { return {&A, A.basis_class<K>(i)}; }
};

template <class K>
CohomClass<K> cup(const CohomClass<K>& u, const CohomClass<K>& v) {
    if (u.algebra != v.algebra) throw InvalidArgument("cup: classes over different algebras");
    return {u.algebra, u.algebra->template cup<K>(u.coeff, v.coeff)};
}
template <class K>
K integrate(const CohomClass<K>& u) {
    return u.algebra->template integrate_checked<K>(u.coeff);
}
template <class K>
CohomClass<K> conjugate(const CohomClass<K>& u) {
    return {u.algebra, u.algebra->template conjugate<K>(u.coeff)};
}

// Every invariant of the graded-algebra contract, reported by name.
// An empty result means the algebra is valid.
std::vector<std::string> validate_algebra(const GradedAlgebra& a);

// Built-in fixtures. Names: "p<n>" (complex projective space),
// "p<a>xp<b>x..." (products), "torus<n>".
GradedAlgebra fixture_projective_space(int n);
GradedAlgebra fixture_product_projective(const std::vector<int>& dims);
GradedAlgebra fixture_torus(int n);
GradedAlgebra make_fixture(const std::string& name);
std::vector<std::string> builtin_fixture_names();

// Structure-constant file format (JSON text; see docs/file-format.md).
GradedAlgebra parse_algebra_json(const std::string& text);
GradedAlgebra load_algebra(const std::string& path);
std::string algebra_to_json(const GradedAlgebra& a);

}  // namespace kcone
