#include "semihom/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace semihom {

namespace {

void check_hom(const FiniteCommMonoid& src, const FiniteCommMonoid& tgt,
               const std::vector<int>& map, const char* what) {
    check(map.size() == static_cast<std::size_t>(src.order()), Errc::invalid_table, what);
    check(map[src.zero()] == tgt.zero(), Errc::invalid_table, what);
    for (int x = 0; x < src.order(); ++x)
        for (int y = x; y < src.order(); ++y)
            check(map[src.add(x, y)] == tgt.add(map[x], map[y]), Errc::invalid_table, what);
}

std::vector<int> compose_maps(const std::vector<int>& second, const std::vector<int>& first) {
    std::vector<int> out(first.size());
    for (std::size_t i = 0; i < first.size(); ++i) out[i] = second[first[i]];
    return out;
}

} // namespace

void TruncatedSimplicialMonoid::validate() const {
    int top = truncation;
    check(static_cast<int>(levels.size()) == top + 1, Errc::invalid_table, "level count");
    check(static_cast<int>(faces.size()) == top + 1, Errc::invalid_table, "face table size");
    check(static_cast<int>(degeneracies.size()) == std::max(top, 0), Errc::invalid_table,
          "degeneracy table size");
    for (int n = 1; n <= top; ++n) {
        check(static_cast<int>(faces[n].size()) == n + 1, Errc::invalid_table, "face count");
        for (int i = 0; i <= n; ++i)
            check_hom(levels[n], levels[n - 1], faces[n][i], "face is not a homomorphism");
    }
    for (int n = 0; n < top; ++n) {
        check(static_cast<int>(degeneracies[n].size()) == n + 1, Errc::invalid_table,
              "degeneracy count");
        for (int j = 0; j <= n; ++j)
            check_hom(levels[n], levels[n + 1], degeneracies[n][j],
                      "degeneracy is not a homomorphism");
    }
    // d_i d_j = d_{j-1} d_i for i < j
    for (int n = 2; n <= top; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                check(compose_maps(faces[n - 1][i], faces[n][j]) ==
                          compose_maps(faces[n - 1][j - 1], faces[n][i]),
                      Errc::invalid_table, "face identity fails");
    // s_i s_j = s_{j+1} s_i for i <= j
    for (int n = 0; n + 1 < top; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                check(compose_maps(degeneracies[n + 1][i], degeneracies[n][j]) ==
                          compose_maps(degeneracies[n + 1][j + 1], degeneracies[n][i]),
                      Errc::invalid_table, "degeneracy identity fails");
    // d_i s_j identities
    for (int n = 0; n < top; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                std::vector<int> lhs = compose_maps(faces[n + 1][i], degeneracies[n][j]);
                if (i == j || i == j + 1) {
                    std::vector<int> identity(levels[n].order());
                    std::iota(identity.begin(), identity.end(), 0);
                    check(lhs == identity, Errc::invalid_table, "mixed identity fails");
                } else if (n >= 1 && i < j) {
                    check(lhs == compose_maps(degeneracies[n - 1][j - 1], faces[n][i]),
                          Errc::invalid_table, "mixed identity fails");
                } else if (n >= 1 && i > j + 1) {
                    check(lhs == compose_maps(degeneracies[n - 1][j], faces[n][i - 1]),
                          Errc::invalid_table, "mixed identity fails");
                }
            }
}

// ---------------------------------------------------------------------------
// Čech resolution
// ---------------------------------------------------------------------------

CechResolution cech_resolution(const MonoidHom& pi, int truncation, long level_cap) {
    check(truncation >= 1, Errc::config, "truncation must be at least 1");
    const FiniteCommMonoid& m = pi.source;
    const FiniteCommMonoid& a = pi.target;
    std::vector<char> hit(a.order(), 0);
    for (int x = 0; x < m.order(); ++x) hit[pi(x)] = 1;
    for (int y = 0; y < a.order(); ++y)
        check(hit[y], Errc::not_surjective, "pi is not surjective");

    // minimal-index section
    std::vector<int> section(a.order(), -1);
    for (int x = m.order() - 1; x >= 0; --x) section[pi(x)] = x;

    CechResolution out;
    out.section = section;
    out.object.truncation = truncation;
    out.object.faces.resize(truncation + 1);
    out.object.degeneracies.resize(truncation);
    out.homotopy.maps.resize(truncation);

    // levels: tuples with all coordinates in one fiber of pi
    std::vector<std::map<std::vector<int>, int>> index(truncation + 1);
    for (int n = 0; n <= truncation; ++n) {
        std::vector<std::vector<int>> tuples;
        std::function<void(std::vector<int>&)> extend = [&](std::vector<int>& t) {
            if (static_cast<int>(t.size()) == n + 1) {
                tuples.push_back(t);
                return;
            }
            for (int x = 0; x < m.order(); ++x) {
                if (!t.empty() && pi(x) != pi(t[0])) continue;
                t.push_back(x);
                extend(t);
                t.pop_back();
            }
        };
        std::vector<int> t;
        extend(t);
        check(static_cast<long>(tuples.size()) <= level_cap, Errc::size_cap_exceeded,
              "Čech level exceeds the size cap");
        for (std::size_t i = 0; i < tuples.size(); ++i) index[n][tuples[i]] = static_cast<int>(i);
        int size = static_cast<int>(tuples.size());
        std::vector<int> table(static_cast<std::size_t>(size) * size);
        std::vector<int> sum(n + 1);
        for (int u = 0; u < size; ++u)
            for (int v = 0; v < size; ++v) {
                for (int c = 0; c <= n; ++c) sum[c] = m.add(tuples[u][c], tuples[v][c]);
                table[static_cast<std::size_t>(u) * size + v] = index[n].at(sum);
            }
        std::vector<int> zero_tuple(n + 1, m.zero());
        out.object.levels.push_back(
            FiniteCommMonoid(size, std::move(table), index[n].at(zero_tuple)));
        out.tuples.push_back(std::move(tuples));
    }

    for (int n = 1; n <= truncation; ++n) {
        out.object.faces[n].resize(n + 1);
        for (int i = 0; i <= n; ++i) {
            std::vector<int> map(out.tuples[n].size());
            for (std::size_t u = 0; u < out.tuples[n].size(); ++u) {
                std::vector<int> t;
                for (int c = 0; c <= n; ++c)
                    if (c != i) t.push_back(out.tuples[n][u][c]);
                map[u] = index[n - 1].at(t);
            }
            out.object.faces[n][i] = std::move(map);
        }
    }
    for (int n = 0; n < truncation; ++n) {
        out.object.degeneracies[n].resize(n + 1);
        for (int j = 0; j <= n; ++j) {
            std::vector<int> map(out.tuples[n].size());
            for (std::size_t u = 0; u < out.tuples[n].size(); ++u) {
                std::vector<int> t;
                for (int c = 0; c <= n; ++c) {
                    t.push_back(out.tuples[n][u][c]);
                    if (c == j) t.push_back(out.tuples[n][u][c]);
                }
                map[u] = index[n + 1].at(t);
            }
            out.object.degeneracies[n][j] = std::move(map);
        }
    }
    out.object.validate();

    // contracting homotopy h_i(m_0..m_n) = (s pi m_0, ..., s pi m_i, m_i, ..., m_n)
    for (int n = 0; n < truncation; ++n) {
        out.homotopy.maps[n].resize(n + 1);
        for (int i = 0; i <= n; ++i) {
            std::vector<int> map(out.tuples[n].size());
            for (std::size_t u = 0; u < out.tuples[n].size(); ++u) {
                const auto& src = out.tuples[n][u];
                std::vector<int> t;
                for (int c = 0; c <= i; ++c) t.push_back(section[pi(src[c])]);
                for (int c = i; c <= n; ++c) t.push_back(src[c]);
                map[u] = index[n + 1].at(t);
            }
            out.homotopy.maps[n][i] = std::move(map);
        }
    }

    // homotopy identities certifying X ≃ the constant object
    for (int n = 0; n < truncation; ++n) {
        const auto& h = out.homotopy.maps[n];
        const auto& d = out.object.faces[n + 1];
        std::vector<int> identity(out.tuples[n].size());
        std::iota(identity.begin(), identity.end(), 0);
        check(compose_maps(d[0], h[0]) == identity, Errc::invalid_table,
              "homotopy does not start at the identity");
        std::vector<int> collapse(out.tuples[n].size());
        for (std::size_t u = 0; u < out.tuples[n].size(); ++u) {
            std::vector<int> t;
            for (int c = 0; c <= n; ++c) t.push_back(section[pi(out.tuples[n][u][c])]);
            collapse[u] = index[n].at(t);
        }
        check(compose_maps(d[n + 1], h[n]) == collapse, Errc::invalid_table,
              "homotopy does not end at the collapse");
        for (int i = 0; i < n; ++i)
            check(compose_maps(d[i + 1], h[i + 1]) == compose_maps(d[i + 1], h[i]),
                  Errc::invalid_table, "adjacent homotopy identity fails");
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                if (n >= 1 && i < j)
                    check(compose_maps(d[i], h[j]) ==
                              compose_maps(out.homotopy.maps[n - 1][j - 1],
                                           out.object.faces[n][i]),
                          Errc::invalid_table, "homotopy face identity fails");
                if (n >= 1 && i > j + 1)
                    check(compose_maps(d[i], h[j]) ==
                              compose_maps(out.homotopy.maps[n - 1][j],
                                           out.object.faces[n][i - 1]),
                          Errc::invalid_table, "homotopy face identity fails");
            }
    }
    return out;
}

TruncatedSimplicialMonoid constant_simplicial(const FiniteCommMonoid& m, int truncation) {
    TruncatedSimplicialMonoid s;
    s.truncation = truncation;
    s.levels.assign(truncation + 1, m);
    std::vector<int> identity(m.order());
    std::iota(identity.begin(), identity.end(), 0);
    s.faces.resize(truncation + 1);
    for (int n = 1; n <= truncation; ++n) s.faces[n].assign(n + 1, identity);
    s.degeneracies.resize(truncation);
    for (int n = 0; n < truncation; ++n) s.degeneracies[n].assign(n + 1, identity);
    s.validate();
    return s;
}

// ---------------------------------------------------------------------------
// Moore homology
// ---------------------------------------------------------------------------

std::vector<int> moore_homology(const TruncatedSimplicialMonoid& s, FieldSpec field, int up_to) {
    check(up_to >= 0 && up_to <= s.truncation - 1, Errc::degree_out_of_range,
          "homology degree outside the reliable range");
    int top = up_to + 1;
    std::vector<int> dims;
    for (int n = 0; n <= top; ++n) dims.push_back(s.levels[n].order());
    std::vector<ExactMatrix> diffs;
    for (int n = 1; n <= top; ++n) {
        ExactMatrix d(field, dims[n - 1], dims[n]);
        for (int i = 0; i <= n; ++i) {
            const auto& face = s.face(n, i);
            for (int u = 0; u < dims[n]; ++u) d.add_to(face[u], u, i % 2 == 0 ? 1 : -1);
        }
        diffs.push_back(std::move(d));
    }
    ChainComplex complex(field, std::move(dims), std::move(diffs));
    std::vector<int> h = homology_dims(complex);
    h.resize(up_to + 1);
    return h;
}

int pi0_classes(const TruncatedSimplicialMonoid& s) {
    int n0 = s.levels[0].order();
    std::vector<int> parent(n0);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    if (s.truncation >= 1)
        for (int u = 0; u < s.levels[1].order(); ++u) {
            int a = find(s.face(1, 0)[u]), b = find(s.face(1, 1)[u]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    int classes = 0;
    for (int x = 0; x < n0; ++x)
        if (find(x) == x) ++classes;
    return classes;
}

// ---------------------------------------------------------------------------
// Hom-dual cosimplicial check
// ---------------------------------------------------------------------------

CosimplicialReport hom_cosimplicial_check(const MonoidHom& pi, const FiniteCommMonoid& b,
                                          FieldSpec field, int truncation, long cap) {
    CechResolution cech = cech_resolution(pi, truncation);
    const auto& x = cech.object;
    CosimplicialReport report;

    std::vector<std::vector<std::vector<int>>> homs; // per level, sorted
    for (int n = 0; n < truncation; ++n) homs.push_back(enumerate_homs(x.levels[n], b, cap));
    for (int n = 0; n < truncation; ++n)
        report.hom_counts.push_back(static_cast<int>(homs[n].size()));
    std::vector<std::vector<int>> base = enumerate_homs(pi.target, b, cap);
    report.base_hom_count = static_cast<int>(base.size());

    auto hom_index = [&](int level, const std::vector<int>& h) {
        auto it = std::lower_bound(homs[level].begin(), homs[level].end(), h);
        check(it != homs[level].end() && *it == h, Errc::invalid_table,
              "precomposed hom not found");
        return static_cast<int>(it - homs[level].begin());
    };

    // augmentation: phi -> phi ∘ (pi on the single coordinate of X_0)
    ExactMatrix aug(field, report.hom_counts[0], report.base_hom_count);
    for (std::size_t j = 0; j < base.size(); ++j) {
        std::vector<int> composed(x.levels[0].order());
        for (int u = 0; u < x.levels[0].order(); ++u)
            composed[u] = base[j][pi(cech.tuples[0][u][0])];
        aug.set(hom_index(0, composed), static_cast<int>(j), 1);
    }
    report.augmentation_injective = rank(aug) == report.base_hom_count;

    // cochain differentials d^n: k[Hom(X_n,B)] -> k[Hom(X_{n+1},B)]
    std::vector<ExactMatrix> diffs;
    for (int n = 0; n + 1 < truncation; ++n) {
        ExactMatrix d(field, report.hom_counts[n + 1], report.hom_counts[n]);
        for (std::size_t j = 0; j < homs[n].size(); ++j)
            for (int i = 0; i <= n + 1; ++i) {
                std::vector<int> composed = x.face(n + 1, i);
                for (auto& v : composed) v = homs[n][j][v];
                d.add_to(hom_index(n + 1, composed), static_cast<int>(j), i % 2 == 0 ? 1 : -1);
            }
        diffs.push_back(std::move(d));
    }

    if (!diffs.empty()) {
        check(diffs[0].multiply(aug).is_zero(), Errc::invalid_table,
              "augmentation does not land in the kernel");
        int ker0 = report.hom_counts[0] - rank(diffs[0]);
        report.exact_at_zero = report.augmentation_injective && ker0 == report.base_hom_count;
    } else {
        report.exact_at_zero = report.augmentation_injective;
    }
    for (std::size_t n = 0; n + 1 < diffs.size(); ++n)
        check(diffs[n + 1].multiply(diffs[n]).is_zero(), Errc::invalid_table,
              "cochain differential does not square to zero");
    for (std::size_t n = 1; n < diffs.size(); ++n) {
        int h = report.hom_counts[n] - rank(diffs[n]) - rank(diffs[n - 1]);
        report.cohomology.push_back(h);
    }
    return report;
}

// ---------------------------------------------------------------------------
// degreewise group completion
// ---------------------------------------------------------------------------

CompletionComparison degreewise_group_completion(const TruncatedSimplicialMonoid& s,
                                                 FieldSpec field) {
    CompletionComparison out;
    out.connected = pi0_classes(s) == 1;
    out.levels_inverse = true;
    out.prop55_hypothesis = true;
    for (const auto& level : s.levels) {
        ClassifyFlags flags = classify(level);
        if (!flags.is_inverse) out.levels_inverse = false;
        for (int e : level.idempotents()) {
            LocalUnits lu = unit_group_at(level, e);
            if (!tensor_Z_vanishes(abelian_invariants(lu.group), field))
                out.prop55_hypothesis = false;
        }
    }

    std::vector<GroupCompletion> completions;
    for (const auto& level : s.levels) completions.push_back(group_completion(level));

    // a preimage of each completed element under the unit map
    std::vector<std::vector<int>> preimage;
    for (std::size_t n = 0; n < completions.size(); ++n) {
        std::vector<int> pre(completions[n].group.order(), -1);
        for (int x = s.levels[n].order() - 1; x >= 0; --x) pre[completions[n].unit_map[x]] = x;
        preimage.push_back(std::move(pre));
    }
    auto induce = [&](const std::vector<int>& map, int from, int to) {
        std::vector<int> ind(completions[from].group.order());
        for (int g = 0; g < completions[from].group.order(); ++g)
            ind[g] = completions[to].unit_map[map[preimage[from][g]]];
        // functoriality audit over the whole unit square
        for (int u = 0; u < s.levels[from].order(); ++u)
            check(ind[completions[from].unit_map[u]] == completions[to].unit_map[map[u]],
                  Errc::invalid_table, "completion is not functorial");
        return ind;
    };

    out.completed.truncation = s.truncation;
    for (const auto& c : completions) out.completed.levels.push_back(c.group);
    out.completed.faces.resize(s.truncation + 1);
    out.completed.degeneracies.resize(s.truncation);
    for (int n = 1; n <= s.truncation; ++n)
        for (int i = 0; i <= n; ++i)
            out.completed.faces[n].push_back(induce(s.face(n, i), n, n - 1));
    for (int n = 0; n < s.truncation; ++n)
        for (int j = 0; j <= n; ++j)
            out.completed.degeneracies[n].push_back(induce(s.degeneracy(n, j), n, n + 1));
    out.completed.validate();

    out.homology_original = moore_homology(s, field, s.truncation - 1);
    out.homology_completed = moore_homology(out.completed, field, s.truncation - 1);
    return out;
}

} // namespace semihom
