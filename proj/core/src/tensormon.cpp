#include "semihom/tensormon.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace semihom {

// ---------------------------------------------------------------------------
// congruence closure
// ---------------------------------------------------------------------------

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        if (x > y) std::swap(x, y);
        parent[y] = x;
        return true;
    }
};

} // namespace

CongruencePartition congruence_closure(const FiniteCommMonoid& m,
                                       const std::vector<std::pair<int, int>>& pairs) {
    int n = m.order();
    Dsu dsu(n);
    std::deque<std::pair<int, int>> work(pairs.begin(), pairs.end());
    while (!work.empty()) {
        auto [x, y] = work.front();
        work.pop_front();
        if (!dsu.unite(x, y)) continue;
        for (int z = 0; z < n; ++z) work.push_back({m.add(x, z), m.add(y, z)});
    }
    std::vector<int> class_of(n, -1);
    std::vector<int> rep_index(n, -1);
    std::vector<int> reps;
    for (int x = 0; x < n; ++x) {
        int r = dsu.find(x);
        if (rep_index[r] < 0) {
            rep_index[r] = static_cast<int>(reps.size());
            reps.push_back(r);
        }
        class_of[x] = rep_index[r];
    }
    std::vector<std::vector<int>> classes(reps.size());
    for (int x = 0; x < n; ++x) classes[class_of[x]].push_back(x);
    int k = static_cast<int>(reps.size());
    std::vector<int> table(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            table[static_cast<std::size_t>(i) * k + j] = class_of[m.add(reps[i], reps[j])];
    FiniteCommMonoid quotient(k, std::move(table), class_of[m.zero()]);
    return CongruencePartition{std::move(class_of), std::move(classes), std::move(quotient)};
}

// ---------------------------------------------------------------------------
// presented semilattices via Horn-rule saturation
// ---------------------------------------------------------------------------

SemilatticePresentation::SemilatticePresentation(int generators) : generators_(generators) {
    check(generators >= 0, Errc::config, "negative generator count");
}

void SemilatticePresentation::relate(std::vector<int> lhs, std::vector<int> rhs) {
    for (int g : lhs) check(g >= 0 && g < generators_, Errc::config, "relation references unknown generator");
    for (int g : rhs) check(g >= 0 && g < generators_, Errc::config, "relation references unknown generator");
    std::sort(lhs.begin(), lhs.end());
    lhs.erase(std::unique(lhs.begin(), lhs.end()), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    rhs.erase(std::unique(rhs.begin(), rhs.end()), rhs.end());
    if (lhs == rhs) return;
    relations_.push_back({std::move(lhs), std::move(rhs)});
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool bit_get(const Bits& b, int i) { return (b[i / 64] >> (i % 64)) & 1; }
void bit_set(Bits& b, int i) { b[i / 64] |= 1ull << (i % 64); }

// Horn rule: once all of `premise` is present, every generator of
// `conclusion` joins the set. Each relation contributes a rule both ways.
struct HornRules {
    int generators;
    std::vector<std::vector<int>> premise, conclusion;
    std::vector<std::vector<int>> watching; // generator -> rule ids containing it

    explicit HornRules(int g) : generators(g), watching(g) {}

    void add_rule(const std::vector<int>& p, const std::vector<int>& c) {
        int id = static_cast<int>(premise.size());
        premise.push_back(p);
        conclusion.push_back(c);
        for (int g : p) watching[g].push_back(id);
    }

    // saturate `s` in place; every present generator is fed through the
    // queue exactly once so the missing-counters stay consistent
    void close(Bits& s) const {
        std::vector<int> missing(premise.size());
        std::vector<int> queue;
        auto add_gen = [&](int g) {
            if (!bit_get(s, g)) {
                bit_set(s, g);
                queue.push_back(g);
            }
        };
        for (int g = 0; g < generators; ++g)
            if (bit_get(s, g)) queue.push_back(g);
        for (std::size_t r = 0; r < premise.size(); ++r) {
            missing[r] = static_cast<int>(premise[r].size());
            if (missing[r] == 0)
                for (int c : conclusion[r]) add_gen(c);
        }
        while (!queue.empty()) {
            int g = queue.back();
            queue.pop_back();
            for (int r : watching[g])
                if (--missing[r] == 0)
                    for (int c : conclusion[r]) add_gen(c);
        }
    }
};

} // namespace

SemilatticePresentation::Result SemilatticePresentation::saturate(long cap) const {
    int g = generators_;
    int words = std::max(1, (g + 63) / 64);
    HornRules rules(g);
    for (const auto& [lhs, rhs] : relations_) {
        rules.add_rule(lhs, rhs);
        rules.add_rule(rhs, lhs);
    }

    std::map<Bits, int> index_of;
    std::vector<Bits> elements;
    auto intern = [&](Bits s) {
        rules.close(s);
        auto it = index_of.find(s);
        if (it != index_of.end()) return it->second;
        int id = static_cast<int>(elements.size());
        check(static_cast<long>(id) < cap, Errc::size_cap_exceeded,
              "presented semilattice exceeds the element cap");
        index_of.emplace(s, id);
        elements.push_back(std::move(s));
        return id;
    };

    int zero = intern(Bits(words, 0));
    std::vector<int> generator_class(g);
    for (int i = 0; i < g; ++i) {
        Bits s(words, 0);
        bit_set(s, i);
        generator_class[i] = intern(std::move(s));
    }
    // close the element list under pairwise join
    std::map<std::pair<int, int>, int> join_memo;
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            Bits s = elements[i];
            for (int w = 0; w < words; ++w) s[w] |= elements[j][w];
            int k = intern(std::move(s));
            join_memo[{static_cast<int>(j), static_cast<int>(i)}] = k;
        }
    int n = static_cast<int>(elements.size());
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto key = std::make_pair(std::min(i, j), std::max(i, j));
            auto it = join_memo.find(key);
            int v;
            if (it != join_memo.end()) {
                v = it->second;
            } else {
                Bits s = elements[i];
                for (int w = 0; w < words; ++w) s[w] |= elements[j][w];
                v = intern(std::move(s));
                join_memo.emplace(key, v);
            }
            table[static_cast<std::size_t>(i) * n + j] = v;
        }
    check(static_cast<int>(elements.size()) == n, Errc::invalid_table,
          "join closure escaped the enumerated carrier");
    return Result{FiniteCommMonoid(n, std::move(table), zero), std::move(generator_class)};
}

// ---------------------------------------------------------------------------
// tensors
// ---------------------------------------------------------------------------

TensorResult tensor_semilattice(const FiniteCommMonoid& a, const FiniteCommMonoid& b, long cap) {
    bool a_semi = classify(a).is_semilattice;
    bool b_semi = classify(b).is_semilattice;
    check(a_semi || b_semi, Errc::not_semilattice,
          "tensor_semilattice needs a semilattice on at least one side");
    int na = a.order(), nb = b.order();
    auto gen = [&](int x, int y) { return x * nb + y; };
    SemilatticePresentation pres(na * nb);
    for (int x = 0; x < na; ++x) pres.relate({gen(x, b.zero())}, {});
    for (int y = 0; y < nb; ++y) pres.relate({gen(a.zero(), y)}, {});
    for (int x1 = 0; x1 < na; ++x1)
        for (int x2 = x1; x2 < na; ++x2)
            for (int y = 0; y < nb; ++y)
                pres.relate({gen(a.add(x1, x2), y)}, {gen(x1, y), gen(x2, y)});
    for (int y1 = 0; y1 < nb; ++y1)
        for (int y2 = y1; y2 < nb; ++y2)
            for (int x = 0; x < na; ++x)
                pres.relate({gen(x, b.add(y1, y2))}, {gen(x, y1), gen(x, y2)});
    auto result = pres.saturate(cap);
    check(classify(result.monoid).is_semilattice, Errc::invalid_table,
          "tensor of semilattices is not a semilattice");
    TensorResult out{std::move(result.monoid), {}};
    out.pure.assign(na, std::vector<int>(nb));
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < nb; ++y) out.pure[x][y] = result.generator_class[gen(x, y)];
    return out;
}

namespace {

// index and period of the multiples 0, x, 2x, ... in m: (i+p)x = ix
std::pair<int, int> cyclic_shape(const FiniteCommMonoid& m, int x) {
    std::vector<int> seen_at(m.order(), -1);
    int cur = m.zero(), step = 0;
    while (seen_at[cur] < 0) {
        seen_at[cur] = step;
        cur = m.add(cur, x);
        ++step;
    }
    int first = seen_at[cur];
    return {first, step - first};
}

// The capped free monoid on the nonzero pure tensors is astronomically large,
// so the bilinearity congruence is saturated lazily: elements (exponent
// vectors) are interned on demand, merges push generator translates, and the
// quotient is read off by closing the generator classes under addition.
struct LazyCongruence {
    std::vector<int> index; // per generator: exponents wrap past index+period
    std::vector<int> period;
    long cap;

    std::map<std::vector<std::uint8_t>, int> intern_map;
    std::vector<std::vector<std::uint8_t>> vecs;
    std::vector<int> parent;

    explicit LazyCongruence(std::vector<int> idx, std::vector<int> per, long cap_in)
        : index(std::move(idx)), period(std::move(per)), cap(cap_in) {}

    int intern(const std::vector<std::uint8_t>& v) {
        auto it = intern_map.find(v);
        if (it != intern_map.end()) return it->second;
        int id = static_cast<int>(vecs.size());
        check(static_cast<long>(id) < cap, Errc::unbounded_tensor,
              "tensor saturation exceeded the element bound");
        intern_map.emplace(v, id);
        vecs.push_back(v);
        parent.push_back(id);
        return id;
    }

    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }

    std::vector<std::uint8_t> translate(const std::vector<std::uint8_t>& v, std::size_t g,
                                        int amount) const {
        std::vector<std::uint8_t> out = v;
        long s = static_cast<long>(out[g]) + amount;
        long radix = index[g] + period[g];
        if (s >= radix) s = index[g] + (s - index[g]) % period[g];
        out[g] = static_cast<std::uint8_t>(s);
        return out;
    }

    std::vector<std::uint8_t> vec_add(const std::vector<std::uint8_t>& u,
                                      const std::vector<std::uint8_t>& v) const {
        std::vector<std::uint8_t> out = u;
        for (std::size_t g = 0; g < out.size(); ++g) {
            long s = static_cast<long>(out[g]) + v[g];
            long radix = index[g] + period[g];
            if (s >= radix) s = index[g] + (s - index[g]) % period[g];
            out[g] = static_cast<std::uint8_t>(s);
        }
        return out;
    }

    void saturate(std::deque<std::pair<int, int>>& work) {
        while (!work.empty()) {
            auto [x, y] = work.front();
            work.pop_front();
            int rx = find(x), ry = find(y);
            if (rx == ry) continue;
            if (rx > ry) std::swap(rx, ry);
            parent[ry] = rx;
            for (std::size_t g = 0; g < index.size(); ++g) {
                int tx = intern(translate(vecs[x], g, 1));
                int ty = intern(translate(vecs[y], g, 1));
                if (find(tx) != find(ty)) work.push_back({tx, ty});
            }
        }
    }
};

} // namespace

namespace {

// greedy generating set plus a canonical expression of every element as a
// sum of generators (breadth-first over the generated submonoid)
struct GeneratorBasis {
    std::vector<int> gens;
    std::vector<std::vector<int>> expr; // element -> multiset of generator slots

    explicit GeneratorBasis(const FiniteCommMonoid& m) {
        int n = m.order();
        expr.assign(n, {});
        std::vector<char> reached(n, 0);
        reached[m.zero()] = 1;
        auto close = [&]() {
            bool changed = true;
            while (changed) {
                changed = false;
                for (int x = 0; x < n; ++x) {
                    if (!reached[x]) continue;
                    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                        int s = m.add(x, gens[gi]);
                        if (!reached[s]) {
                            reached[s] = 1;
                            expr[s] = expr[x];
                            expr[s].push_back(static_cast<int>(gi));
                            changed = true;
                        }
                    }
                }
            }
        };
        for (int x = 0; x < n; ++x) {
            if (reached[x]) continue;
            expr[x] = {static_cast<int>(gens.size())};
            gens.push_back(x);
            reached[x] = 1;
            close();
        }
    }
};

} // namespace

TensorResult tensor_bounded(const FiniteCommMonoid& a, const FiniteCommMonoid& b, long bound) {
    int na = a.order(), nb = b.order();
    // generators of the tensor: products of the factor generators
    GeneratorBasis ga(a), gb(b);
    int sa = static_cast<int>(ga.gens.size());
    int sb = static_cast<int>(gb.gens.size());
    std::vector<int> cap_index, cap_period;
    for (int i = 0; i < sa; ++i)
        for (int j = 0; j < sb; ++j) {
            auto [ia, pa] = cyclic_shape(a, ga.gens[i]);
            auto [ib, pb] = cyclic_shape(b, gb.gens[j]);
            // either side caps the exponents of s (x) t; take the smaller orbit
            if (ia + pa <= ib + pb) {
                cap_index.push_back(ia);
                cap_period.push_back(pa);
            } else {
                cap_index.push_back(ib);
                cap_period.push_back(pb);
            }
        }
    std::size_t ng = static_cast<std::size_t>(sa) * sb;
    LazyCongruence lc(cap_index, cap_period, bound);
    std::vector<std::uint8_t> zero_vec(ng, 0);
    int zero_id = lc.intern(zero_vec);
    // bilinear expansion of a pure tensor through the canonical expressions
    auto pure_vec = [&](int x, int y) {
        std::vector<std::uint8_t> v(ng, 0);
        for (int i : ga.expr[x])
            for (int j : gb.expr[y]) {
                std::vector<std::uint8_t> e(ng, 0);
                e[static_cast<std::size_t>(i) * sb + j] = 1;
                v = lc.vec_add(v, e);
            }
        return v;
    };
    std::deque<std::pair<int, int>> work;
    for (int x1 = 0; x1 < na; ++x1)
        for (int x2 = x1; x2 < na; ++x2)
            for (int y = 0; y < nb; ++y) {
                int lhs = lc.intern(pure_vec(a.add(x1, x2), y));
                int rhs = lc.intern(lc.vec_add(pure_vec(x1, y), pure_vec(x2, y)));
                if (lhs != rhs) work.push_back({lhs, rhs});
            }
    for (int y1 = 0; y1 < nb; ++y1)
        for (int y2 = y1; y2 < nb; ++y2)
            for (int x = 0; x < na; ++x) {
                int lhs = lc.intern(pure_vec(x, b.add(y1, y2)));
                int rhs = lc.intern(lc.vec_add(pure_vec(x, y1), pure_vec(x, y2)));
                if (lhs != rhs) work.push_back({lhs, rhs});
            }
    lc.saturate(work);

    // the tensor is generated by the pure classes: close them under addition
    std::map<int, int> class_index; // congruence root -> quotient element
    std::vector<int> root_of;       // quotient element -> congruence root
    auto class_of = [&](int id) {
        int root = lc.find(id);
        auto it = class_index.find(root);
        if (it != class_index.end()) return it->second;
        int q = static_cast<int>(root_of.size());
        check(static_cast<long>(q) < bound, Errc::unbounded_tensor,
              "tensor quotient exceeded the element bound");
        class_index.emplace(root, q);
        root_of.push_back(root);
        return q;
    };
    (void)class_of(zero_id);
    std::vector<std::vector<int>> pure(na, std::vector<int>(nb));
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < nb; ++y) pure[x][y] = class_of(lc.intern(pure_vec(x, y)));
    // close the element list under addition (root_of grows under the loop)
    for (std::size_t q = 0; q < root_of.size(); ++q)
        for (std::size_t r = 0; r <= q; ++r)
            (void)class_of(lc.intern(lc.vec_add(lc.vecs[root_of[q]], lc.vecs[root_of[r]])));
    int n = static_cast<int>(root_of.size());
    std::vector<int> table(static_cast<std::size_t>(n) * n, -1);
    for (int q = 0; q < n; ++q)
        for (int r = 0; r < n; ++r) {
            int s = class_of(lc.intern(lc.vec_add(lc.vecs[root_of[q]], lc.vecs[root_of[r]])));
            check(s < n, Errc::invalid_table, "class closure escaped the enumerated carrier");
            table[static_cast<std::size_t>(q) * n + r] = s;
        }
    return TensorResult{FiniteCommMonoid(n, std::move(table), 0), std::move(pure)};
}

std::vector<int> tensor_map_left(const FiniteCommMonoid& a, const FiniteCommMonoid& a2,
                                 const FiniteCommMonoid& b, const std::vector<int>& hom,
                                 const TensorResult& src, const TensorResult& dst) {
    check(hom.size() == static_cast<std::size_t>(a.order()), Errc::shape_mismatch,
          "hom size mismatch");
    (void)a2;
    int n = src.monoid.order();
    std::vector<int> out(n, -1);
    out[src.monoid.zero()] = dst.monoid.zero();
    // propagate from pure tensors by making every element a join of pures
    bool changed = true;
    for (int x = 0; x < a.order(); ++x)
        for (int y = 0; y < b.order(); ++y) {
            int s = src.pure[x][y];
            int d = dst.pure[hom[x]][y];
            check(out[s] < 0 || out[s] == d, Errc::invalid_table,
                  "induced tensor map is not well defined");
            out[s] = d;
        }
    while (changed) {
        changed = false;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                if (out[u] < 0 || out[v] < 0) continue;
                int s = src.monoid.add(u, v);
                int d = dst.monoid.add(out[u], out[v]);
                if (out[s] < 0) {
                    out[s] = d;
                    changed = true;
                } else {
                    check(out[s] == d, Errc::invalid_table,
                          "induced tensor map is not well defined");
                }
            }
    }
    for (int u = 0; u < n; ++u)
        check(out[u] >= 0, Errc::invalid_table, "tensor not generated by pure tensors");
    return out;
}

// ---------------------------------------------------------------------------
// monoid-level coend
// ---------------------------------------------------------------------------

CoendResult coend_mon(const FiniteCategory& c, const MonFunctor& a, const MonFunctor& b,
                      long cap) {
    int n = c.objects();
    check(a.cat != nullptr && b.cat != nullptr, Errc::config, "functor without category");
    check(static_cast<int>(a.values.size()) == n && static_cast<int>(b.values.size()) == n,
          Errc::shape_mismatch, "functor window mismatch");
    for (int x = 0; x < n; ++x) {
        check(classify(a.values[x]).is_semilattice, Errc::not_semilattice,
              "coend_mon needs semilattice values (contravariant side)");
        check(classify(b.values[x]).is_semilattice, Errc::not_semilattice,
              "coend_mon needs semilattice values (covariant side)");
    }
    std::vector<int> offset(n + 1, 0);
    for (int x = 0; x < n; ++x)
        offset[x + 1] = offset[x] + a.values[x].order() * b.values[x].order();
    auto gen = [&](int obj, int x, int y) {
        return offset[obj] + x * b.values[obj].order() + y;
    };
    SemilatticePresentation pres(offset[n]);
    for (int obj = 0; obj < n; ++obj) {
        const FiniteCommMonoid& av = a.values[obj];
        const FiniteCommMonoid& bv = b.values[obj];
        for (int x = 0; x < av.order(); ++x) pres.relate({gen(obj, x, bv.zero())}, {});
        for (int y = 0; y < bv.order(); ++y) pres.relate({gen(obj, av.zero(), y)}, {});
        for (int x1 = 0; x1 < av.order(); ++x1)
            for (int x2 = x1; x2 < av.order(); ++x2)
                for (int y = 0; y < bv.order(); ++y)
                    pres.relate({gen(obj, av.add(x1, x2), y)},
                                {gen(obj, x1, y), gen(obj, x2, y)});
        for (int y1 = 0; y1 < bv.order(); ++y1)
            for (int y2 = y1; y2 < bv.order(); ++y2)
                for (int x = 0; x < av.order(); ++x)
                    pres.relate({gen(obj, x, bv.add(y1, y2))},
                                {gen(obj, x, y1), gen(obj, x, y2)});
    }
    // coend relations: A(f)x (x) y at the source ~ x (x) B(f)y at the target
    for (int src = 0; src < n; ++src)
        for (int dst = 0; dst < n; ++dst)
            for (int f = 0; f < c.hom_size(src, dst); ++f) {
                const auto& a_act = a.act(dst, src, f); // contravariant
                const auto& b_act = b.act(src, dst, f);
                for (int x = 0; x < a.values[dst].order(); ++x)
                    for (int y = 0; y < b.values[src].order(); ++y)
                        pres.relate({gen(src, a_act[x], y)}, {gen(dst, x, b_act[y])});
            }
    auto result = pres.saturate(cap);
    CoendResult out{std::move(result.monoid), {}};
    out.pure.assign(n, {});
    for (int obj = 0; obj < n; ++obj) {
        out.pure[obj].assign(a.values[obj].order(), std::vector<int>(b.values[obj].order()));
        for (int x = 0; x < a.values[obj].order(); ++x)
            for (int y = 0; y < b.values[obj].order(); ++y)
                out.pure[obj][x][y] = result.generator_class[gen(obj, x, y)];
    }
    return out;
}

} // namespace semihom
