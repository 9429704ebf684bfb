#include "semihom/monoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace semihom {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace

FiniteCommMonoid::FiniteCommMonoid(int order, std::vector<int> table, int zero)
    : n_(order), zero_(zero), table_(std::move(table)) {
    check(n_ > 0, Errc::invalid_table, "monoid order must be positive");
    check(zero_ >= 0 && zero_ < n_, Errc::invalid_table, "neutral element out of range");
    check(table_.size() == static_cast<std::size_t>(n_) * n_, Errc::invalid_table,
          "Cayley table size mismatch");
    for (int v : table_)
        check(v >= 0 && v < n_, Errc::invalid_table, "Cayley table entry out of range");
    for (int x = 0; x < n_; ++x) {
        check(add(zero_, x) == x, Errc::invalid_table, "neutral element fails");
        for (int y = x + 1; y < n_; ++y)
            check(add(x, y) == add(y, x), Errc::invalid_table, "table not commutative");
    }
    if (n_ <= kAssocExhaustiveLimit) {
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y)
                for (int z = 0; z < n_; ++z)
                    check(add(add(x, y), z) == add(x, add(y, z)), Errc::invalid_table,
                          "table not associative");
    } else {
        std::uint64_t state = 0;
        for (int trial = 0; trial < 2'000'000; ++trial) {
            int x = static_cast<int>(splitmix64(state) % n_);
            int y = static_cast<int>(splitmix64(state) % n_);
            int z = static_cast<int>(splitmix64(state) % n_);
            check(add(add(x, y), z) == add(x, add(y, z)), Errc::invalid_table,
                  "table not associative");
        }
    }
}

std::vector<int> FiniteCommMonoid::idempotents() const {
    std::vector<int> e;
    for (int x = 0; x < n_; ++x)
        if (is_idempotent(x)) e.push_back(x);
    return e;
}

int FiniteCommMonoid::multiple(int k, int x) const {
    int acc = zero_;
    int pow = x;
    while (k > 0) {
        if (k & 1) acc = add(acc, pow);
        pow = add(pow, pow);
        k >>= 1;
    }
    return acc;
}

FiniteCommMonoid FiniteCommMonoid::parse(std::istream& in) {
    std::string kw;
    in >> kw;
    check(bool(in) && kw == "monoid", Errc::config, "expected 'monoid' header");
    int n = 0;
    in >> n;
    check(bool(in) && n > 0, Errc::config, "bad monoid order");
    std::string zspec;
    in >> zspec;
    check(bool(in) && zspec.rfind("zero=", 0) == 0, Errc::config, "expected zero=i");
    int zero = -1;
    try {
        zero = std::stoi(zspec.substr(5));
    } catch (...) {
        throw Error(Errc::config, "bad zero index");
    }
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (auto& v : table) {
        in >> v;
        check(bool(in), Errc::config, "truncated Cayley table");
    }
    return FiniteCommMonoid(n, std::move(table), zero);
}

FiniteCommMonoid FiniteCommMonoid::parse_text(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

std::string FiniteCommMonoid::to_text() const {
    std::ostringstream out;
    out << "monoid " << n_ << " zero=" << zero_ << "\n";
    for (int x = 0; x < n_; ++x) {
        for (int y = 0; y < n_; ++y) out << (y ? " " : "") << add(x, y);
        out << "\n";
    }
    return out.str();
}

// --- constructors ----------------------------------------------------------

FiniteCommMonoid trivial_monoid() { return FiniteCommMonoid(1, {0}, 0); }

FiniteCommMonoid cyclic_group(int n) {
    check(n >= 1, Errc::config, "cyclic group order must be >= 1");
    std::vector<int> t(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[static_cast<std::size_t>(x) * n + y] = (x + y) % n;
    return FiniteCommMonoid(n, std::move(t), 0);
}

FiniteCommMonoid cyclic_monoid(int index, int period) {
    check(index >= 0 && period >= 1, Errc::config, "bad cyclic monoid parameters");
    int n = index + period;
    auto wrap = [&](int k) { return k < n ? k : index + (k - index) % period; };
    std::vector<int> t(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[static_cast<std::size_t>(x) * n + y] = wrap(x + y);
    return FiniteCommMonoid(n, std::move(t), 0);
}

FiniteCommMonoid product_monoid(const FiniteCommMonoid& a, const FiniteCommMonoid& b) {
    int na = a.order(), nb = b.order();
    int n = na * nb;
    std::vector<int> t(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int xa = x / nb, xb = x % nb;
            int ya = y / nb, yb = y % nb;
            t[static_cast<std::size_t>(x) * n + y] = a.add(xa, ya) * nb + b.add(xb, yb);
        }
    return FiniteCommMonoid(n, std::move(t), a.zero() * nb + b.zero());
}

FiniteCommMonoid adjoin_absorbing(const FiniteCommMonoid& m) {
    int n = m.order() + 1;
    int inf = n - 1;
    std::vector<int> t(static_cast<std::size_t>(n) * n, inf);
    for (int x = 0; x < m.order(); ++x)
        for (int y = 0; y < m.order(); ++y) t[static_cast<std::size_t>(x) * n + y] = m.add(x, y);
    return FiniteCommMonoid(n, std::move(t), m.zero());
}

FiniteCommMonoid chain_semilattice(int n) {
    check(n >= 1, Errc::config, "chain length must be >= 1");
    std::vector<int> t(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[static_cast<std::size_t>(x) * n + y] = std::max(x, y);
    return FiniteCommMonoid(n, std::move(t), 0);
}

FiniteCommMonoid two_element_semilattice() { return chain_semilattice(2); }

// --- predicates -------------------------------------------------------------

ClassifyFlags classify(const FiniteCommMonoid& m) {
    ClassifyFlags flags{true, true, true};
    int n = m.order();
    for (int x = 0; x < n && flags.is_semilattice; ++x)
        if (!m.is_idempotent(x)) flags.is_semilattice = false;
    for (int f = 0; f < n; ++f) {
        int witnesses = 0;
        bool regular = false;
        for (int g = 0; g < n; ++g) {
            if (m.add(m.add(f, g), f) == f) {
                regular = true;
                if (m.add(m.add(g, f), g) == g) ++witnesses;
            }
        }
        if (!regular) flags.is_regular = false;
        if (witnesses != 1) flags.is_inverse = false;
    }
    return flags;
}

int pseudo_inverse(const FiniteCommMonoid& m, int x) {
    int found = -1;
    for (int g = 0; g < m.order(); ++g) {
        if (m.add(m.add(x, g), x) == x && m.add(m.add(g, x), g) == g) {
            if (found >= 0) throw Error(Errc::not_inverse_monoid, "pseudo-inverse not unique");
            found = g;
        }
    }
    check(found >= 0, Errc::not_inverse_monoid, "element has no pseudo-inverse");
    return found;
}

// --- local units and Clifford decomposition ---------------------------------

LocalUnits unit_group_at(const FiniteCommMonoid& m, int e) {
    check(m.is_idempotent(e), Errc::invalid_table, "unit_group_at expects an idempotent");
    int n = m.order();
    std::vector<int> local;
    std::vector<char> in_local(n, 0);
    for (int x = 0; x < n; ++x) {
        int u = m.add(e, x);
        if (!in_local[u]) {
            in_local[u] = 1;
            local.push_back(u);
        }
    }
    std::sort(local.begin(), local.end());
    std::vector<int> units;
    for (int u : local) {
        bool invertible = false;
        for (int v : local)
            if (m.add(u, v) == e) {
                invertible = true;
                break;
            }
        if (invertible) units.push_back(u);
    }
    std::vector<int> index_of(n, -1);
    for (std::size_t i = 0; i < units.size(); ++i) index_of[units[i]] = static_cast<int>(i);
    int k = static_cast<int>(units.size());
    std::vector<int> t(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            int s = m.add(units[i], units[j]);
            check(index_of[s] >= 0, Errc::invalid_table, "units not closed");
            t[static_cast<std::size_t>(i) * k + j] = index_of[s];
        }
    return LocalUnits{FiniteCommMonoid(k, std::move(t), index_of[e]), units};
}

CliffordData clifford_data(const FiniteCommMonoid& m) {
    ClassifyFlags flags = classify(m);
    check(flags.is_inverse, Errc::not_inverse_monoid, "clifford_data needs an inverse monoid");
    CliffordData data;
    data.idempotents = m.idempotents();
    std::vector<int> idem_index(m.order(), -1);
    for (std::size_t i = 0; i < data.idempotents.size(); ++i)
        idem_index[data.idempotents[i]] = static_cast<int>(i);
    data.component_of.assign(m.order(), -1);
    for (int e : data.idempotents) {
        LocalUnits lu = unit_group_at(m, e);
        for (int u : lu.embedding) {
            check(data.component_of[u] == -1, Errc::invalid_table, "Clifford components overlap");
            data.component_of[u] = idem_index[e];
        }
        data.unit_groups.push_back(lu.group);
        data.embeddings.push_back(lu.embedding);
    }
    std::size_t covered = 0;
    for (const auto& emb : data.embeddings) covered += emb.size();
    check(covered == static_cast<std::size_t>(m.order()), Errc::invalid_table,
          "Clifford components do not cover the monoid");
    // e = x + x* lands every element in its own component
    for (int x = 0; x < m.order(); ++x) {
        int e = m.add(x, pseudo_inverse(m, x));
        check(data.component_of[x] == idem_index[e], Errc::invalid_table,
              "Clifford component disagrees with x + x*");
    }
    return data;
}

std::vector<int> clifford_structure_map(const FiniteCommMonoid& m, const CliffordData& data,
                                        int from_idem, int to_idem) {
    int e = data.idempotents[from_idem];
    int f = data.idempotents[to_idem];
    check(m.add(e, f) == f, Errc::invalid_table, "structure map needs f <= e");
    const auto& src = data.embeddings[from_idem];
    const auto& dst = data.embeddings[to_idem];
    std::vector<int> out(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
        int image = m.add(src[i], f);
        auto it = std::find(dst.begin(), dst.end(), image);
        check(it != dst.end(), Errc::invalid_table, "structure map leaves the unit group");
        out[i] = static_cast<int>(it - dst.begin());
    }
    const FiniteCommMonoid& ga = data.unit_groups[from_idem];
    const FiniteCommMonoid& gb = data.unit_groups[to_idem];
    for (int x = 0; x < ga.order(); ++x)
        for (int y = 0; y < ga.order(); ++y)
            check(out[ga.add(x, y)] == gb.add(out[x], out[y]), Errc::invalid_table,
                  "structure map is not a homomorphism");
    return out;
}

MonoidAlgebraIso monoid_algebra_decomposition(const FiniteCommMonoid& m, FieldSpec field) {
    MonoidAlgebraIso iso{clifford_data(m), {}, ExactMatrix(field, m.order(), m.order())};
    int offset = 0;
    for (const auto& g : iso.clifford.unit_groups) {
        iso.block_offset.push_back(offset);
        offset += g.order();
    }
    check(offset == m.order(), Errc::invalid_table, "Clifford blocks do not fill k[M]");
    for (int x = 0; x < m.order(); ++x) {
        int e = iso.clifford.idempotents[iso.clifford.component_of[x]];
        for (std::size_t fi = 0; fi < iso.clifford.idempotents.size(); ++fi) {
            int f = iso.clifford.idempotents[fi];
            if (m.add(f, e) != f) continue; // needs f <= e
            int image = m.add(x, f);
            const auto& emb = iso.clifford.embeddings[fi];
            auto it = std::find(emb.begin(), emb.end(), image);
            check(it != emb.end(), Errc::invalid_table, "x + f outside G_f");
            iso.phi.set(iso.block_offset[fi] + static_cast<int>(it - emb.begin()), x, 1);
        }
    }
    check(rank(iso.phi) == m.order(), Errc::invalid_table, "decomposition matrix is singular");
    return iso;
}

bool decomposition_is_multiplicative(const FiniteCommMonoid& m, const MonoidAlgebraIso& iso) {
    int n = m.order();
    int blocks = static_cast<int>(iso.clifford.unit_groups.size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            ExactMatrix lhs = iso.phi.col(m.add(x, y));
            ExactMatrix rhs(iso.phi.field(), n, 1);
            for (int b = 0; b < blocks; ++b) {
                const FiniteCommMonoid& g = iso.clifford.unit_groups[b];
                int off = iso.block_offset[b];
                for (int i = 0; i < g.order(); ++i) {
                    if (iso.phi.entry_is_zero(off + i, x)) continue;
                    for (int j = 0; j < g.order(); ++j) {
                        if (iso.phi.entry_is_zero(off + j, y)) continue;
                        mpq_class prod = iso.phi.get(off + i, x) * iso.phi.get(off + j, y);
                        int row = off + g.add(i, j);
                        rhs.set(row, 0, mpq_class(rhs.get(row, 0) + prod));
                    }
                }
            }
            if (!(lhs == rhs)) return false;
        }
    return true;
}

// --- group completion --------------------------------------------------------

long FiniteAbelianGroup::order() const {
    long o = 1;
    for (long d : invariant_factors) o *= d;
    return o;
}

FiniteAbelianGroup abelian_invariants(const FiniteCommMonoid& g) {
    int n = g.order();
    for (int x = 0; x < n; ++x) {
        bool has_inverse = false;
        for (int y = 0; y < n; ++y)
            if (g.add(x, y) == g.zero()) {
                has_inverse = true;
                break;
            }
        check(has_inverse, Errc::invalid_table, "abelian_invariants expects a group");
    }
    // factor the order
    std::vector<std::pair<long, int>> primes;
    long rest = n;
    for (long p = 2; p * p <= rest; ++p)
        if (rest % p == 0) {
            int e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            primes.push_back({p, e});
        }
    if (rest > 1) primes.push_back({rest, 1});

    // per prime, exponents of the p-part read off from |{x : p^k x = 0}|
    std::vector<std::vector<int>> exps_per_prime;
    for (auto [p, mult] : primes) {
        long sylow = 1;
        for (int i = 0; i < mult; ++i) sylow *= p;
        std::vector<long> counts = {1};
        long pk = 1;
        while (counts.back() < sylow) {
            pk *= p;
            long c = 0;
            for (int x = 0; x < n; ++x)
                if (g.multiple(static_cast<int>(pk), x) == g.zero()) ++c;
            counts.push_back(c);
        }
        std::vector<int> exps;
        for (std::size_t k = 1; k < counts.size(); ++k) {
            long ratio = counts[k] / counts[k - 1];
            int geq = 0;
            while (ratio > 1) {
                ratio /= p;
                ++geq;
            }
            // `geq` many cyclic factors have exponent >= k
            while (static_cast<int>(exps.size()) < geq) exps.push_back(0);
            for (int i = 0; i < geq; ++i) ++exps[i];
        }
        std::sort(exps.begin(), exps.end(), std::greater<int>());
        exps_per_prime.push_back(exps);
    }
    std::size_t r = 0;
    for (const auto& e : exps_per_prime) r = std::max(r, e.size());
    std::vector<long> factors(r, 1);
    for (std::size_t pi = 0; pi < primes.size(); ++pi)
        for (std::size_t i = 0; i < exps_per_prime[pi].size(); ++i) {
            long q = 1;
            for (int k = 0; k < exps_per_prime[pi][i]; ++k) q *= primes[pi].first;
            factors[i] *= q;
        }
    std::reverse(factors.begin(), factors.end()); // ascending, d_i | d_{i+1}
    FiniteAbelianGroup out{factors};
    check(out.order() == n, Errc::invalid_table, "invariant factor bookkeeping failed");
    return out;
}

GroupCompletion group_completion(const FiniteCommMonoid& m) {
    int n = m.order();
    int total = m.zero();
    for (int x = 0; x < n; ++x) total = m.add(total, x);
    // idempotent power of the total sum
    int e = -1;
    int u = total;
    for (int k = 1; k <= 2 * n + 2; ++k) {
        if (m.is_idempotent(u)) {
            e = u;
            break;
        }
        u = m.add(u, total);
    }
    check(e >= 0, Errc::invalid_table, "no idempotent power found");
    std::vector<int> carrier;
    std::vector<int> index_of(n, -1);
    for (int x = 0; x < n; ++x) {
        int v = m.add(e, x);
        if (index_of[v] < 0) {
            index_of[v] = 0;
            carrier.push_back(v);
        }
    }
    std::sort(carrier.begin(), carrier.end());
    std::fill(index_of.begin(), index_of.end(), -1);
    for (std::size_t i = 0; i < carrier.size(); ++i) index_of[carrier[i]] = static_cast<int>(i);
    int k = static_cast<int>(carrier.size());
    std::vector<int> t(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            t[static_cast<std::size_t>(i) * k + j] = index_of[m.add(carrier[i], carrier[j])];
    FiniteCommMonoid group(k, std::move(t), index_of[e]);
    std::vector<int> unit_map(n);
    for (int x = 0; x < n; ++x) unit_map[x] = index_of[m.add(e, x)];
    FiniteAbelianGroup inv = abelian_invariants(group);
    return GroupCompletion{std::move(group), std::move(inv), std::move(unit_map)};
}

bool tensor_Z_vanishes(const FiniteAbelianGroup& g, FieldSpec field) {
    if (field.is_rationals()) return true; // finite groups die rationally
    long p = field.characteristic();
    for (long d : g.invariant_factors)
        if (d % p == 0) return false;
    return true;
}

bool is_k_trivial_monoid(const FiniteCommMonoid& m, FieldSpec field) {
    if (!classify(m).is_regular) return false;
    for (int e : m.idempotents()) {
        LocalUnits lu = unit_group_at(m, e);
        if (!tensor_Z_vanishes(abelian_invariants(lu.group), field)) return false;
    }
    return true;
}

// --- hom enumeration ---------------------------------------------------------

MonoidHom::MonoidHom(FiniteCommMonoid source_in, FiniteCommMonoid target_in, std::vector<int> map_in)
    : source(std::move(source_in)), target(std::move(target_in)), map(std::move(map_in)) {
    check(map.size() == static_cast<std::size_t>(source.order()), Errc::invalid_table,
          "hom map size mismatch");
    check(map[source.zero()] == target.zero(), Errc::invalid_table, "hom does not fix zero");
    for (int x = 0; x < source.order(); ++x)
        for (int y = x; y < source.order(); ++y)
            check(map[source.add(x, y)] == target.add(map[x], map[y]), Errc::invalid_table,
                  "map is not a homomorphism");
}

namespace {

// Assignment schedule for hom/character search: most elements are sums of
// earlier ones, so their values are forced; only the rest branch.
struct HomSchedule {
    std::vector<int> elem;      // element assigned at each depth
    std::vector<int> forced_x;  // if >= 0, elem[d] = forced_x[d] + forced_y[d]
    std::vector<int> forced_y;
    std::vector<std::vector<std::pair<int, int>>> checks; // pairs verifiable at depth d
    std::vector<int> pos_of;
};

HomSchedule build_schedule(const FiniteCommMonoid& a) {
    int n = a.order();
    HomSchedule s;
    s.pos_of.assign(n, -1);
    auto place = [&](int e, int fx, int fy) {
        s.pos_of[e] = static_cast<int>(s.elem.size());
        s.elem.push_back(e);
        s.forced_x.push_back(fx);
        s.forced_y.push_back(fy);
    };
    place(a.zero(), -1, -1);
    while (static_cast<int>(s.elem.size()) < n) {
        int found = -1, fx = -1, fy = -1;
        for (std::size_t i = 0; i < s.elem.size() && found < 0; ++i)
            for (std::size_t j = i; j < s.elem.size() && found < 0; ++j) {
                int sum = a.add(s.elem[i], s.elem[j]);
                if (s.pos_of[sum] < 0) {
                    found = sum;
                    fx = s.elem[i];
                    fy = s.elem[j];
                }
            }
        if (found >= 0) {
            place(found, fx, fy);
        } else {
            for (int e = 0; e < n; ++e)
                if (s.pos_of[e] < 0) {
                    place(e, -1, -1);
                    break;
                }
        }
    }
    s.checks.resize(n);
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y) {
            int d = std::max({s.pos_of[x], s.pos_of[y], s.pos_of[a.add(x, y)]});
            s.checks[d].push_back({x, y});
        }
    return s;
}

// Exhaustive search over maps a -> {0..target_size-1} respecting a binary law
// given by `combine`, with `zero_value` at the monoid zero.
template <class Combine>
void enumerate_maps(const FiniteCommMonoid& a, int target_size, int zero_value, Combine combine,
                    long cap, std::vector<std::vector<int>>& out) {
    HomSchedule sched = build_schedule(a);
    int n = a.order();
    std::vector<int> value(n, -1);
    long visited = 0;

    auto consistent_at = [&](int depth) {
        for (auto [x, y] : sched.checks[depth])
            if (value[a.add(x, y)] != combine(value[x], value[y])) return false;
        return true;
    };

    std::vector<int> choice(n, -1);
    int depth = 0;
    while (depth >= 0) {
        if (depth == n) {
            out.push_back(value);
            --depth;
            continue;
        }
        int e = sched.elem[depth];
        bool single = depth == 0 || sched.forced_x[depth] >= 0;
        int next_choice = choice[depth] + 1;
        bool exhausted = single ? next_choice > 0 : next_choice >= target_size;
        if (exhausted) {
            choice[depth] = -1;
            value[e] = -1;
            --depth;
            continue;
        }
        choice[depth] = next_choice;
        if (depth == 0)
            value[e] = zero_value;
        else if (sched.forced_x[depth] >= 0)
            value[e] = combine(value[sched.forced_x[depth]], value[sched.forced_y[depth]]);
        else
            value[e] = next_choice;
        if (++visited > cap)
            throw Error(Errc::enumeration_cap_exceeded, "hom enumeration cap exceeded");
        if (consistent_at(depth)) ++depth;
        // on inconsistency stay at this depth and try the next value
    }
}

} // namespace

std::vector<std::vector<int>> enumerate_homs(const FiniteCommMonoid& a, const FiniteCommMonoid& b,
                                             long cap) {
    std::vector<std::vector<int>> out;
    enumerate_maps(
        a, b.order(), b.zero(), [&](int u, int v) { return b.add(u, v); }, cap, out);
    std::sort(out.begin(), out.end());
    return out;
}

DualMonoid two_element_dual(const FiniteCommMonoid& m, long cap) {
    FiniteCommMonoid two = two_element_semilattice();
    std::vector<std::vector<int>> homs = enumerate_homs(m, two, cap);
    int k = static_cast<int>(homs.size());
    auto index_of = [&](const std::vector<int>& h) {
        auto it = std::lower_bound(homs.begin(), homs.end(), h);
        check(it != homs.end() && *it == h, Errc::invalid_table, "dual not closed under sum");
        return static_cast<int>(it - homs.begin());
    };
    std::vector<int> table(static_cast<std::size_t>(k) * k);
    std::vector<int> tmp(m.order());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            for (int x = 0; x < m.order(); ++x) tmp[x] = two.add(homs[i][x], homs[j][x]);
            table[static_cast<std::size_t>(i) * k + j] = index_of(tmp);
        }
    std::vector<int> zero_hom(m.order(), 0);
    return DualMonoid{FiniteCommMonoid(k, std::move(table), index_of(zero_hom)), std::move(homs)};
}

std::vector<std::vector<long>> characters(const FiniteCommMonoid& m, FieldSpec field, long cap) {
    check(!field.is_rationals(), Errc::not_finite_field, "characters need a finite field");
    long p = field.characteristic();
    std::vector<std::vector<int>> raw;
    enumerate_maps(
        m, static_cast<int>(p), 1,
        [&](int u, int v) { return static_cast<int>((static_cast<long>(u) * v) % p); }, cap, raw);
    std::sort(raw.begin(), raw.end());
    std::vector<std::vector<long>> out;
    for (const auto& r : raw) out.emplace_back(r.begin(), r.end());
    return out;
}

// --- isomorphism search -------------------------------------------------------

namespace {

struct ElementSignature {
    bool idempotent;
    int cyc_index, cyc_period;
    int distinct_translates;
    int decompositions;
    bool operator==(const ElementSignature&) const = default;
};

ElementSignature signature_of(const FiniteCommMonoid& m, int x) {
    ElementSignature s{};
    s.idempotent = m.is_idempotent(x);
    // index and period of {x, 2x, 3x, ...}
    std::vector<int> seen_at(m.order(), -1);
    int cur = x, step = 1;
    while (seen_at[cur] < 0) {
        seen_at[cur] = step;
        cur = m.add(cur, x);
        ++step;
    }
    s.cyc_index = seen_at[cur] - 1;
    s.cyc_period = step - seen_at[cur];
    std::vector<char> hit(m.order(), 0);
    int distinct = 0;
    for (int y = 0; y < m.order(); ++y) {
        int t = m.add(x, y);
        if (!hit[t]) {
            hit[t] = 1;
            ++distinct;
        }
    }
    s.distinct_translates = distinct;
    int dec = 0;
    for (int u = 0; u < m.order(); ++u)
        for (int v = u; v < m.order(); ++v)
            if (m.add(u, v) == x) ++dec;
    s.decompositions = dec;
    return s;
}

bool iso_backtrack(const FiniteCommMonoid& a, const FiniteCommMonoid& b,
                   const std::vector<ElementSignature>& sig_a,
                   const std::vector<ElementSignature>& sig_b, std::vector<int>& map,
                   std::vector<char>& used, int x) {
    int n = a.order();
    if (x == n) {
        for (int u = 0; u < n; ++u)
            for (int v = u; v < n; ++v)
                if (map[a.add(u, v)] != b.add(map[u], map[v])) return false;
        return true;
    }
    if (map[x] >= 0) return iso_backtrack(a, b, sig_a, sig_b, map, used, x + 1);
    for (int y = 0; y < n; ++y) {
        if (used[y] || !(sig_a[x] == sig_b[y])) continue;
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            if (map[u] < 0) continue;
            int s = a.add(x, u);
            if (map[s] >= 0 && map[s] != b.add(y, map[u])) ok = false;
        }
        if (!ok) continue;
        map[x] = y;
        used[y] = 1;
        if (iso_backtrack(a, b, sig_a, sig_b, map, used, x + 1)) return true;
        map[x] = -1;
        used[y] = 0;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> find_monoid_iso(const FiniteCommMonoid& a,
                                                const FiniteCommMonoid& b) {
    if (a.order() != b.order()) return std::nullopt;
    int n = a.order();
    std::vector<ElementSignature> sig_a, sig_b;
    for (int x = 0; x < n; ++x) sig_a.push_back(signature_of(a, x));
    for (int y = 0; y < n; ++y) sig_b.push_back(signature_of(b, y));
    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    if (!(sig_a[a.zero()] == sig_b[b.zero()])) return std::nullopt;
    map[a.zero()] = b.zero();
    used[b.zero()] = 1;
    if (iso_backtrack(a, b, sig_a, sig_b, map, used, 0)) return map;
    return std::nullopt;
}

} // namespace semihom
