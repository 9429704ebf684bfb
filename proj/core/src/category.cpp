#include "semihom/category.hpp"

namespace semihom {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

constexpr long kExhaustiveWork = 20'000'000;

} // namespace

FiniteCategory::FiniteCategory(Tables tables) : t_(std::move(tables)) {
    int n = t_.n_objects;
    check(n > 0, Errc::config, "category needs at least one object");
    check(static_cast<int>(t_.object_names.size()) == n, Errc::config, "object name count");
    check(static_cast<int>(t_.hom_size.size()) == n, Errc::config, "hom size table");
    check(static_cast<int>(t_.identity.size()) == n, Errc::config, "identity table");
    for (int x = 0; x < n; ++x)
        check(t_.identity[x] >= 0 && t_.identity[x] < t_.hom_size[x][x], Errc::config,
              "identity index out of range");

    // identity laws, exhaustive
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int f = 0; f < t_.hom_size[x][y]; ++f) {
                check(compose(x, y, y, t_.identity[y], f) == f, Errc::invalid_table,
                      "left identity fails");
                check(compose(x, x, y, f, t_.identity[x]) == f, Errc::invalid_table,
                      "right identity fails");
            }

    // associativity: h∘(g∘f) = (h∘g)∘f, exhaustive when cheap, sampled otherwise
    long work = 0;
    for (int w = 0; w < n; ++w)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    work += static_cast<long>(t_.hom_size[w][x]) * t_.hom_size[x][y] *
                            t_.hom_size[y][z];
    if (work <= kExhaustiveWork) {
        for (int w = 0; w < n; ++w)
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int z = 0; z < n; ++z)
                        for (int f = 0; f < t_.hom_size[w][x]; ++f)
                            for (int g = 0; g < t_.hom_size[x][y]; ++g)
                                for (int h = 0; h < t_.hom_size[y][z]; ++h)
                                    check(compose(w, y, z, h, compose(w, x, y, g, f)) ==
                                              compose(w, x, z, compose(x, y, z, h, g), f),
                                          Errc::invalid_table, "composition not associative");
    } else {
        std::uint64_t state = 1;
        for (int trial = 0; trial < 2'000'000; ++trial) {
            int w = static_cast<int>(splitmix64(state) % n);
            int x = static_cast<int>(splitmix64(state) % n);
            int y = static_cast<int>(splitmix64(state) % n);
            int z = static_cast<int>(splitmix64(state) % n);
            if (t_.hom_size[w][x] == 0 || t_.hom_size[x][y] == 0 || t_.hom_size[y][z] == 0)
                continue;
            int f = static_cast<int>(splitmix64(state) % t_.hom_size[w][x]);
            int g = static_cast<int>(splitmix64(state) % t_.hom_size[x][y]);
            int h = static_cast<int>(splitmix64(state) % t_.hom_size[y][z]);
            check(compose(w, y, z, h, compose(w, x, y, g, f)) ==
                      compose(w, x, z, compose(x, y, z, h, g), f),
                  Errc::invalid_table, "composition not associative");
        }
    }

    if (t_.has_addition) {
        // hom-monoid laws come with the monoid view; check biadditivity of
        // composition on a budgeted sample
        std::uint64_t state = 2;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) (void)hom_monoid(x, y);
        long pairs = 0;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    pairs += static_cast<long>(t_.hom_size[x][y]) * t_.hom_size[x][y] *
                             t_.hom_size[y][z];
        auto check_biadd = [&](int x, int y, int z, int f1, int f2, int g) {
            // (f1 + f2) then g equals g∘f1 + g∘f2; and dually in g
            int lhs = compose(x, y, z, g, add(x, y, f1, f2));
            int rhs = add(x, z, compose(x, y, z, g, f1), compose(x, y, z, g, f2));
            check(lhs == rhs, Errc::invalid_table, "composition not additive in the source");
        };
        if (pairs <= kExhaustiveWork) {
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int z = 0; z < n; ++z)
                        for (int f1 = 0; f1 < t_.hom_size[x][y]; ++f1)
                            for (int f2 = 0; f2 < t_.hom_size[x][y]; ++f2)
                                for (int g = 0; g < t_.hom_size[y][z]; ++g)
                                    check_biadd(x, y, z, f1, f2, g);
        } else {
            for (int trial = 0; trial < 500'000; ++trial) {
                int x = static_cast<int>(splitmix64(state) % n);
                int y = static_cast<int>(splitmix64(state) % n);
                int z = static_cast<int>(splitmix64(state) % n);
                if (t_.hom_size[x][y] == 0 || t_.hom_size[y][z] == 0) continue;
                int f1 = static_cast<int>(splitmix64(state) % t_.hom_size[x][y]);
                int f2 = static_cast<int>(splitmix64(state) % t_.hom_size[x][y]);
                int g = static_cast<int>(splitmix64(state) % t_.hom_size[y][z]);
                check_biadd(x, y, z, f1, f2, g);
            }
        }
    }
}

FiniteCommMonoid FiniteCategory::hom_monoid(int x, int y) const {
    check(t_.has_addition, Errc::config, "category has no hom addition");
    int k = t_.hom_size[x][y];
    std::vector<int> table(static_cast<std::size_t>(k) * k);
    for (int f = 0; f < k; ++f)
        for (int g = 0; g < k; ++g) table[static_cast<std::size_t>(f) * k + g] = add(x, y, f, g);
    return FiniteCommMonoid(k, std::move(table), zero_mor(x, y));
}

FiniteCategory FiniteCategory::opposite() const {
    Tables op;
    int n = t_.n_objects;
    op.n_objects = n;
    op.object_names = t_.object_names;
    op.identity = t_.identity;
    op.hom_size.assign(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) op.hom_size[x][y] = t_.hom_size[y][x];
    op.comp.assign(n, std::vector<std::vector<std::vector<int>>>(
                          n, std::vector<std::vector<int>>(n)));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                auto& table = op.comp[x][y][z];
                table.resize(static_cast<std::size_t>(op.hom_size[y][z]) * op.hom_size[x][y]);
                for (int g = 0; g < op.hom_size[y][z]; ++g)      // g in C(z,y)
                    for (int f = 0; f < op.hom_size[x][y]; ++f)  // f in C(y,x)
                        table[static_cast<std::size_t>(g) * op.hom_size[x][y] + f] =
                            compose(z, y, x, f, g);
            }
    op.has_addition = t_.has_addition;
    if (op.has_addition) {
        op.add.assign(n, std::vector<std::vector<int>>(n));
        op.zero_mor.assign(n, std::vector<int>(n));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                op.add[x][y] = t_.add[y][x];
                op.zero_mor[x][y] = t_.zero_mor[y][x];
            }
    }
    return FiniteCategory(std::move(op));
}

long FiniteCategory::total_morphisms() const {
    long total = 0;
    for (int x = 0; x < t_.n_objects; ++x)
        for (int y = 0; y < t_.n_objects; ++y) total += t_.hom_size[x][y];
    return total;
}

FiniteCategory one_object_category(const FiniteCommMonoid& compose_monoid,
                                   const std::optional<FiniteCommMonoid>& add_monoid,
                                   const std::string& name) {
    int k = compose_monoid.order();
    FiniteCategory::Tables t;
    t.n_objects = 1;
    t.object_names = {name};
    t.hom_size = {{k}};
    t.identity = {compose_monoid.zero()};
    t.comp.assign(1, std::vector<std::vector<std::vector<int>>>(
                         1, std::vector<std::vector<int>>(1)));
    auto& table = t.comp[0][0][0];
    table.resize(static_cast<std::size_t>(k) * k);
    for (int g = 0; g < k; ++g)
        for (int f = 0; f < k; ++f)
            table[static_cast<std::size_t>(g) * k + f] = compose_monoid.add(g, f);
    if (add_monoid) {
        check(add_monoid->order() == k, Errc::config, "addition carrier size mismatch");
        t.has_addition = true;
        t.add.assign(1, std::vector<std::vector<int>>(1));
        t.add[0][0].resize(static_cast<std::size_t>(k) * k);
        for (int g = 0; g < k; ++g)
            for (int f = 0; f < k; ++f)
                t.add[0][0][static_cast<std::size_t>(g) * k + f] = add_monoid->add(f, g);
        t.zero_mor = {{add_monoid->zero()}};
    }
    return FiniteCategory(std::move(t));
}

void MonFunctor::validate() const {
    check(cat != nullptr, Errc::config, "functor without a category");
    int n = cat->objects();
    check(static_cast<int>(values.size()) == n, Errc::invalid_table, "value count mismatch");
    for (int x = 0; x < n; ++x) {
        const auto& id_map = act(x, x, cat->identity(x));
        for (int e = 0; e < values[x].order(); ++e)
            check(id_map[e] == e, Errc::invalid_table, "identity does not act as identity");
    }
    // every action is a monoid homomorphism
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int f = 0; f < cat->hom_size(x, y); ++f) {
                const auto& m = act(x, y, f);
                check(m[values[x].zero()] == values[y].zero(), Errc::invalid_table,
                      "action does not fix zero");
                for (int u = 0; u < values[x].order(); ++u)
                    for (int v = u; v < values[x].order(); ++v)
                        check(m[values[x].add(u, v)] == values[y].add(m[u], m[v]),
                              Errc::invalid_table, "action is not a homomorphism");
            }
    // composition law, exhaustive when cheap
    long work = 0;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                work += static_cast<long>(cat->hom_size(x, y)) * cat->hom_size(y, z) *
                        values[x].order();
    if (work <= 20'000'000) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    for (int f = 0; f < cat->hom_size(x, y); ++f)
                        for (int g = 0; g < cat->hom_size(y, z); ++g) {
                            int gf = cat->compose(x, y, z, g, f);
                            for (int e = 0; e < values[x].order(); ++e)
                                check(apply(x, z, gf, e) == apply(y, z, g, apply(x, y, f, e)),
                                      Errc::invalid_table, "functor breaks composition");
                        }
    } else {
        std::uint64_t state = 3;
        for (int trial = 0; trial < 1'000'000; ++trial) {
            int x = static_cast<int>(splitmix64(state) % n);
            int y = static_cast<int>(splitmix64(state) % n);
            int z = static_cast<int>(splitmix64(state) % n);
            if (cat->hom_size(x, y) == 0 || cat->hom_size(y, z) == 0) continue;
            int f = static_cast<int>(splitmix64(state) % cat->hom_size(x, y));
            int g = static_cast<int>(splitmix64(state) % cat->hom_size(y, z));
            int e = static_cast<int>(splitmix64(state) % values[x].order());
            int gf = cat->compose(x, y, z, g, f);
            check(apply(x, z, gf, e) == apply(y, z, g, apply(x, y, f, e)), Errc::invalid_table,
                  "functor breaks composition");
        }
    }
}

MonFunctor representable_functor(const FiniteCategory& cat, int a) {
    check(cat.has_addition(), Errc::config, "representable functor needs hom addition");
    MonFunctor f;
    f.cat = &cat;
    int n = cat.objects();
    for (int x = 0; x < n; ++x) f.values.push_back(cat.hom_monoid(a, x));
    f.action.assign(n, std::vector<std::vector<std::vector<int>>>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            f.action[x][y].resize(cat.hom_size(x, y));
            for (int g = 0; g < cat.hom_size(x, y); ++g) {
                std::vector<int> m(cat.hom_size(a, x));
                for (int h = 0; h < cat.hom_size(a, x); ++h) m[h] = cat.compose(a, x, y, g, h);
                f.action[x][y][g] = std::move(m);
            }
        }
    f.validate();
    return f;
}

MonFunctor constant_functor(const FiniteCategory& cat, const FiniteCommMonoid& value) {
    MonFunctor f;
    f.cat = &cat;
    int n = cat.objects();
    f.values.assign(n, value);
    f.action.assign(n, std::vector<std::vector<std::vector<int>>>(n));
    std::vector<int> id(value.order());
    for (int e = 0; e < value.order(); ++e) id[e] = e;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) f.action[x][y].assign(cat.hom_size(x, y), id);
    f.validate();
    return f;
}

} // namespace semihom
