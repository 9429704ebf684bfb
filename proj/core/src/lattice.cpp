#include "semihom/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace semihom {

FiniteLattice::FiniteLattice(int order, std::vector<char> leq_in)
    : n_(order), leq_(std::move(leq_in)), bottom_(-1), top_(-1) {
    check(n_ > 0, Errc::invalid_table, "lattice order must be positive");
    check(leq_.size() == static_cast<std::size_t>(n_) * n_, Errc::invalid_table,
          "leq matrix size mismatch");
    for (int a = 0; a < n_; ++a) check(leq(a, a), Errc::invalid_table, "leq not reflexive");
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            if (a != b && leq(a, b) && leq(b, a))
                throw Error(Errc::invalid_table, "leq not antisymmetric");
            if (!leq(a, b)) continue;
            for (int c = 0; c < n_; ++c)
                if (leq(b, c)) check(leq(a, c), Errc::invalid_table, "leq not transitive");
        }
    join_.assign(static_cast<std::size_t>(n_) * n_, -1);
    meet_.assign(static_cast<std::size_t>(n_) * n_, -1);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            int lub = -1, glb = -1;
            for (int c = 0; c < n_; ++c) {
                if (leq(a, c) && leq(b, c) && (lub < 0 || leq(c, lub))) lub = c;
                if (leq(c, a) && leq(c, b) && (glb < 0 || leq(glb, c))) glb = c;
            }
            check(lub >= 0, Errc::invalid_table, "pair without upper bound");
            check(glb >= 0, Errc::invalid_table, "pair without lower bound");
            for (int c = 0; c < n_; ++c) {
                if (leq(a, c) && leq(b, c))
                    check(leq(lub, c), Errc::invalid_table, "join is not least");
                if (leq(c, a) && leq(c, b))
                    check(leq(c, glb), Errc::invalid_table, "meet is not greatest");
            }
            join_[static_cast<std::size_t>(a) * n_ + b] = lub;
            meet_[static_cast<std::size_t>(a) * n_ + b] = glb;
        }
    for (int c = 0; c < n_; ++c) {
        bool bot = true, top = true;
        for (int a = 0; a < n_; ++a) {
            bot = bot && leq(c, a);
            top = top && leq(a, c);
        }
        if (bot) bottom_ = c;
        if (top) top_ = c;
    }
    check(bottom_ >= 0 && top_ >= 0, Errc::invalid_table, "lattice needs bottom and top");
}

FiniteLattice FiniteLattice::chain(int n) {
    check(n >= 1, Errc::config, "chain length must be >= 1");
    std::vector<char> leq(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) leq[static_cast<std::size_t>(a) * n + b] = 1;
    return FiniteLattice(n, std::move(leq));
}

FiniteLattice FiniteLattice::boolean(int k) {
    check(k >= 0 && k <= 16, Errc::config, "boolean lattice exponent out of range");
    int n = 1 << k;
    std::vector<char> leq(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if ((a & b) == a) leq[static_cast<std::size_t>(a) * n + b] = 1;
    return FiniteLattice(n, std::move(leq));
}

FiniteLattice FiniteLattice::product(const FiniteLattice& x, const FiniteLattice& y) {
    int nx = x.order(), ny = y.order();
    int n = nx * ny;
    std::vector<char> leq(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (x.leq(a / ny, b / ny) && y.leq(a % ny, b % ny))
                leq[static_cast<std::size_t>(a) * n + b] = 1;
    return FiniteLattice(n, std::move(leq));
}

FiniteLattice FiniteLattice::from_name(const std::string& name) {
    auto colon = name.find(':');
    check(colon != std::string::npos, Errc::config, "lattice name needs kind:arg, got " + name);
    std::string kind = name.substr(0, colon);
    int arg = -1;
    try {
        arg = std::stoi(name.substr(colon + 1));
    } catch (...) {
        throw Error(Errc::config, "bad lattice argument in " + name);
    }
    if (kind == "chain") return chain(arg);
    if (kind == "boolean") return boolean(arg);
    throw Error(Errc::config, "unknown lattice builtin " + kind);
}

FiniteLattice FiniteLattice::parse(std::istream& in) {
    std::string kw;
    in >> kw;
    check(bool(in) && kw == "lattice", Errc::config, "expected 'lattice' header");
    int n = 0;
    in >> n;
    check(bool(in) && n > 0, Errc::config, "bad lattice order");
    std::vector<char> leq(static_cast<std::size_t>(n) * n);
    for (auto& v : leq) {
        int bit;
        in >> bit;
        check(bool(in) && (bit == 0 || bit == 1), Errc::config, "leq entries must be 0/1");
        v = static_cast<char>(bit);
    }
    return FiniteLattice(n, std::move(leq));
}

FiniteLattice FiniteLattice::parse_text(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

std::string FiniteLattice::to_text() const {
    std::ostringstream out;
    out << "lattice " << n_ << "\n";
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) out << (b ? " " : "") << (leq(a, b) ? 1 : 0);
        out << "\n";
    }
    return out.str();
}

bool is_distributive(const FiniteLattice& l) {
    int n = l.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) return false;
    return true;
}

FiniteCommMonoid join_monoid(const FiniteLattice& l) {
    int n = l.order();
    std::vector<int> t(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = l.join(a, b);
    return FiniteCommMonoid(n, std::move(t), l.bottom());
}

FiniteCommMonoid meet_monoid(const FiniteLattice& l) {
    int n = l.order();
    std::vector<int> t(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = l.meet(a, b);
    return FiniteCommMonoid(n, std::move(t), l.top());
}

SelfDuality semilattice_self_duality(const FiniteLattice& l) {
    SelfDuality out{two_element_dual(join_monoid(l)), {}, {}};
    int n = l.order();
    check(static_cast<int>(out.dual.homs.size()) == n, Errc::invalid_table,
          "hom count differs from the lattice order");
    out.to_lattice.resize(n);
    std::vector<char> hit(n, 0);
    for (int i = 0; i < n; ++i) {
        // f^{-1}(0) is the principal ideal of the image element
        const auto& f = out.dual.homs[i];
        int t = l.bottom();
        for (int x = 0; x < n; ++x)
            if (f[x] == 0) t = l.join(t, x);
        for (int x = 0; x < n; ++x)
            check((f[x] == 0) == l.leq(x, t), Errc::invalid_table,
                  "hom kernel is not a principal ideal");
        out.to_lattice[i] = t;
        check(!hit[t], Errc::invalid_table, "duality map not injective");
        hit[t] = 1;
    }
    // pointwise sum of homs intersects their ideals: the canonical map lands
    // in the meet monoid
    FiniteCommMonoid meets = meet_monoid(l);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            check(out.to_lattice[out.dual.monoid.add(i, j)] ==
                      meets.add(out.to_lattice[i], out.to_lattice[j]),
                  Errc::invalid_table, "duality map is not additive");
    auto iso = find_monoid_iso(out.dual.monoid, join_monoid(l));
    check(iso.has_value(), Errc::invalid_table, "hom monoid not isomorphic to the join monoid");
    out.join_iso = *iso;
    return out;
}

ExactMatrix duality_evaluation_matrix(const FiniteLattice& l, const SelfDuality& d,
                                      FieldSpec field) {
    int n = l.order();
    ExactMatrix m(field, n, n);
    for (int a = 0; a < n; ++a)
        for (int i = 0; i < n; ++i)
            if (l.leq(a, d.to_lattice[i])) m.set(a, i, 1);
    check(rank(m) == n, Errc::singular, "evaluation pairing is singular");
    return m;
}

} // namespace semihom
