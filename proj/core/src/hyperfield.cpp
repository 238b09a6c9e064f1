#include "hyperchar/hyperfield.hpp"

#include <algorithm>
#include <limits>

#include <boost/dynamic_bitset.hpp>

namespace hyperchar {

bool ClassSet::contains(ClassId c) const {
    return std::binary_search(members.begin(), members.end(), c);
}

QuotientHyperfield::QuotientHyperfield(Prime p, u64 n)
    : group_(subgroup_of_order(p, n)) {
    constexpr auto unset = std::numeric_limits<std::size_t>::max();
    orbit_index_.assign(p, unset);
    orbit_index_[0] = 0;
    classes_.push_back(ClassId{0});
    orbits_.push_back({0});
    // Scanning residues upward makes the first residue of each new orbit its minimum.
    for (u64 r = 1; r < p; ++r) {
        if (orbit_index_[r] != unset) continue;
        const std::size_t idx = classes_.size();
        std::vector<u64> orbit;
        orbit.reserve(group_.order());
        for (u64 g : group_.elements()) {
            const u64 member = mul_mod(r, g, p);
            orbit_index_[member] = idx;
            orbit.push_back(member);
        }
        std::sort(orbit.begin(), orbit.end());
        classes_.push_back(ClassId{r});
        orbits_.push_back(std::move(orbit));
    }
}

ClassSet QuotientHyperfield::add(ClassId x, ClassId y) const {
    const u64 p = prime();
    boost::dynamic_bitset<> hit(class_count());
    for (u64 u : orbit(x)) {
        for (u64 v : orbit(y)) hit.set(orbit_index_[add_mod(u, v, p)]);
    }
    ClassSet out;
    for (auto i = hit.find_first(); i != hit.npos; i = hit.find_next(i)) {
        out.members.push_back(classes_[i]);
    }
    return out;
}

ClassSet QuotientHyperfield::add(const ClassSet& a, const ClassSet& b) const {
    boost::dynamic_bitset<> hit(class_count());
    for (ClassId x : a.members) {
        for (ClassId y : b.members) {
            for (ClassId c : add(x, y).members) hit.set(index_of(c));
        }
    }
    ClassSet out;
    for (auto i = hit.find_first(); i != hit.npos; i = hit.find_next(i)) {
        out.members.push_back(classes_[i]);
    }
    return out;
}

ClassId QuotientHyperfield::mul(ClassId x, ClassId y) const {
    return class_of(mul_mod(x.rep, y.rep, prime()));
}

QuotientHyperfield build_quotient(Prime p, u64 n) { return QuotientHyperfield(p, n); }

ClassSet hyperadd(const QuotientHyperfield& h, ClassId x, ClassId y) { return h.add(x, y); }

ClassId hypermul(const QuotientHyperfield& h, ClassId x, ClassId y) { return h.mul(x, y); }

bool n_fold_sum_contains_zero(const QuotientHyperfield& h, u64 n) {
    if (n == 0) return true;
    const std::size_t c = h.class_count();
    const ClassId one = h.one();

    std::vector<boost::dynamic_bitset<>> plus_one(c, boost::dynamic_bitset<>(c));
    for (std::size_t i = 0; i < c; ++i) {
        for (ClassId s : h.add(h.classes()[i], one).members) plus_one[i].set(h.index_of(s));
    }

    boost::dynamic_bitset<> current(c);
    current.set(h.index_of(one));
    for (u64 k = 1; k < n; ++k) {
        boost::dynamic_bitset<> next(c);
        for (auto i = current.find_first(); i != current.npos; i = current.find_next(i)) {
            next |= plus_one[i];
        }
        current.swap(next);
    }
    return current.test(0);
}

bool AxiomReport::all_ok() const noexcept {
    return identity_ok && inverse_unique_ok && reversibility_ok &&
           reversibility_from_distributivity_ok && associativity_ok && commutativity_ok &&
           distributivity_ok && absorption_ok && multiplicative_inverses_ok;
}

namespace {

using Bits = boost::dynamic_bitset<>;

// Index-space tables for the exhaustive audit.
struct Tables {
    std::size_t c = 0;
    std::vector<Bits> sum;              // sum[x * c + y] = x + y as a class bitset
    std::vector<std::size_t> product;   // product[x * c + y] = index of x * y
    std::vector<std::size_t> neg;

    const Bits& add(std::size_t x, std::size_t y) const { return sum[x * c + y]; }
    std::size_t mul(std::size_t x, std::size_t y) const { return product[x * c + y]; }

    Bits add(const Bits& a, std::size_t z) const {
        Bits out(c);
        for (auto u = a.find_first(); u != a.npos; u = a.find_next(u)) out |= add(u, z);
        return out;
    }
    Bits add(std::size_t x, const Bits& b) const {
        Bits out(c);
        for (auto v = b.find_first(); v != b.npos; v = b.find_next(v)) out |= add(x, v);
        return out;
    }
    Bits scale(std::size_t a, const Bits& s) const {
        Bits out(c);
        for (auto u = s.find_first(); u != s.npos; u = s.find_next(u)) out.set(mul(a, u));
        return out;
    }
};

Tables make_tables(const QuotientHyperfield& h) {
    Tables t;
    t.c = h.class_count();
    t.sum.assign(t.c * t.c, Bits(t.c));
    t.product.assign(t.c * t.c, 0);
    t.neg.resize(t.c);
    const auto& cls = h.classes();
    for (std::size_t x = 0; x < t.c; ++x) {
        t.neg[x] = h.index_of(h.negate(cls[x]));
        for (std::size_t y = 0; y < t.c; ++y) {
            for (ClassId s : h.add(cls[x], cls[y]).members) t.sum[x * t.c + y].set(h.index_of(s));
            t.product[x * t.c + y] = h.index_of(h.mul(cls[x], cls[y]));
        }
    }
    return t;
}

class Recorder {
public:
    Recorder(const QuotientHyperfield& h, AxiomReport& report) : h_(h), report_(report) {}

    void fail(bool& flag, const char* axiom, std::size_t x, std::size_t y = 0, std::size_t z = 0) {
        flag = false;
        if (report_.counterexamples.size() < kMaxWitnesses) {
            const auto& cls = h_.classes();
            report_.counterexamples.push_back({axiom, cls[x].rep, cls[y].rep, cls[z].rep});
        }
    }

private:
    static constexpr std::size_t kMaxWitnesses = 64;
    const QuotientHyperfield& h_;
    AxiomReport& report_;
};

}  // namespace

AxiomReport check_axioms(const QuotientHyperfield& h) {
    AxiomReport report;
    Recorder rec(h, report);
    const Tables t = make_tables(h);
    const std::size_t c = t.c;
    const std::size_t zero = 0;
    const std::size_t one = h.index_of(h.one());

    if (one == zero) rec.fail(report.multiplicative_inverses_ok, "zero_ne_one", zero, one);

    for (std::size_t x = 0; x < c; ++x) {
        const Bits& s = t.add(zero, x);
        if (s.count() != 1 || !s.test(x)) rec.fail(report.identity_ok, "additive_identity", x);
        if (t.mul(one, x) != x) rec.fail(report.identity_ok, "multiplicative_identity", x);
        if (t.mul(x, zero) != zero) rec.fail(report.absorption_ok, "absorption", x);

        std::size_t inverses = 0;
        for (std::size_t y = 0; y < c; ++y) inverses += t.add(x, y).test(zero) ? 1 : 0;
        if (inverses != 1) rec.fail(report.inverse_unique_ok, "unique_hyperinverse", x);

        if (x != zero) {
            bool invertible = false;
            for (std::size_t y = 0; y < c && !invertible; ++y) invertible = t.mul(x, y) == one;
            if (!invertible) rec.fail(report.multiplicative_inverses_ok, "multiplicative_inverse", x);
        }

        for (std::size_t y = 0; y < c; ++y) {
            if (t.add(x, y) != t.add(y, x)) rec.fail(report.commutativity_ok, "add_commutative", x, y);
            if (t.mul(x, y) != t.mul(y, x)) rec.fail(report.commutativity_ok, "mul_commutative", x, y);
        }
    }

    for (std::size_t x = 0; x < c; ++x) {
        for (std::size_t y = 0; y < c; ++y) {
            const Bits& xy = t.add(x, y);
            const std::size_t neg_y = t.neg[y];
            for (std::size_t z = 0; z < c; ++z) {
                if (t.add(xy, z) != t.add(x, t.add(y, z))) {
                    rec.fail(report.associativity_ok, "add_associative", x, y, z);
                }
                if (t.mul(t.mul(x, y), z) != t.mul(x, t.mul(y, z))) {
                    rec.fail(report.associativity_ok, "mul_associative", x, y, z);
                }
                // Here x plays the scalar: x * (y + z) = xy + xz.
                if (t.scale(x, t.add(y, z)) != t.add(t.mul(x, y), t.mul(x, z))) {
                    rec.fail(report.distributivity_ok, "distributive", x, y, z);
                }

                const bool lhs = t.add(y, z).test(x);
                const bool rhs = t.add(x, neg_y).test(z);
                if (lhs != rhs) rec.fail(report.reversibility_ok, "reversibility", x, y, z);

                if (!lhs) continue;
                // Replay the derivation of z in x + (-y) from x in y + z:
                // 0 in (-x) + (y + z) = ((-x) + y) + z, and (-x) + y = -(x + (-y))
                // by distributivity with scalar -1; the unique inverse of z then
                // has to lie in (-x) + y.
                const std::size_t neg_x = t.neg[x];
                const std::size_t minus_one = t.neg[one];
                const Bits& shifted = t.add(neg_x, y);
                bool derived = t.scale(minus_one, t.add(x, neg_y)) == shifted;
                derived = derived && t.add(neg_x, t.add(y, z)).test(zero);
                bool found = false;
                for (auto w = shifted.find_first(); w != shifted.npos; w = shifted.find_next(w)) {
                    if (t.add(w, z).test(zero)) {
                        found = true;
                        derived = derived && w == t.neg[z];
                    }
                }
                derived = derived && found && rhs;
                if (!derived) {
                    rec.fail(report.reversibility_from_distributivity_ok,
                             "reversibility_from_distributivity", x, y, z);
                }
            }
        }
    }
    return report;
}

}  // namespace hyperchar
