#ifndef SEMIHOM_CATEGORY_HPP
#define SEMIHOM_CATEGORY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "semihom/monoid.hpp"

namespace semihom {

// A finite category with every hom-set enumerated and composition tabulated.
// Morphisms are addressed as (source, target, index). When the category is
// semi-additive the hom-sets additionally carry commutative-monoid addition.
class FiniteCategory {
public:
    struct Tables {
        int n_objects = 0;
        std::vector<std::string> object_names;
        std::vector<std::vector<int>> hom_size;              // [src][tgt]
        std::vector<int> identity;                           // per object
        // comp[x][y][z][g * hom(x,y) + f] = g∘f for f: x->y, g: y->z
        std::vector<std::vector<std::vector<std::vector<int>>>> comp;
        // optional hom-monoid structure
        bool has_addition = false;
        std::vector<std::vector<std::vector<int>>> add;      // [x][y][g * hom + f]
        std::vector<std::vector<int>> zero_mor;              // [x][y]
    };

    explicit FiniteCategory(Tables tables); // validates laws (sampled above a size cap)

    int objects() const { return t_.n_objects; }
    const std::string& object_name(int x) const { return t_.object_names[x]; }
    int hom_size(int x, int y) const { return t_.hom_size[x][y]; }
    int identity(int x) const { return t_.identity[x]; }
    int compose(int x, int y, int z, int g_yz, int f_xy) const {
        return t_.comp[x][y][z][static_cast<std::size_t>(g_yz) * t_.hom_size[x][y] + f_xy];
    }
    bool has_addition() const { return t_.has_addition; }
    int add(int x, int y, int f, int g) const {
        return t_.add[x][y][static_cast<std::size_t>(g) * t_.hom_size[x][y] + f];
    }
    int zero_mor(int x, int y) const { return t_.zero_mor[x][y]; }

    FiniteCommMonoid hom_monoid(int x, int y) const;

    FiniteCategory opposite() const;

    long total_morphisms() const;

private:
    Tables t_;
};

// category with one object whose endomorphisms compose by `compose_monoid`
// and add by `add_monoid` (same carrier)
FiniteCategory one_object_category(const FiniteCommMonoid& compose_monoid,
                                   const std::optional<FiniteCommMonoid>& add_monoid,
                                   const std::string& name = "pt");

// A Mon-valued functor on a FiniteCategory window: one finite commutative
// monoid per object and a monoid homomorphism per morphism (covariant; use
// cat.opposite() for contravariant functors).
struct MonFunctor {
    const FiniteCategory* cat = nullptr;
    std::vector<FiniteCommMonoid> values;
    // action[x][y][f] maps element indices of values[x] to values[y]
    std::vector<std::vector<std::vector<std::vector<int>>>> action;

    const std::vector<int>& act(int x, int y, int f) const { return action[x][y][f]; }
    int apply(int x, int y, int f, int elem) const { return action[x][y][f][elem]; }

    // identity, composition and homomorphism laws; work-capped sampling on
    // large windows, exhaustive otherwise
    void validate() const;
};

// representable h_a = Hom(a, -) with pointwise hom addition (needs addition)
MonFunctor representable_functor(const FiniteCategory& cat, int a);

// constant functor at a fixed monoid (all actions identity... every morphism
// acts as the identity map)
MonFunctor constant_functor(const FiniteCategory& cat, const FiniteCommMonoid& value);

} // namespace semihom

#endif
