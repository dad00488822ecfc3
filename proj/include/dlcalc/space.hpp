#pragma once

// The four base spaces and their homology coalgebras with the dual Steenrod action.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dlcalc {

enum class SpaceId { RPinf, BSpin2, BSpin3, SigmaCPinf };

// A basis class of H_*(X): e_r, a_i, b_i or abar_r.
struct SpaceClass
{
    SpaceId space;
    int index;

    int degree() const;
    bool operator==(const SpaceClass&) const = default;
};

int base_degree(SpaceId space, int index);
// Index of the degree-0 class, if the space has one.
bool has_degree_zero_class(SpaceId space);
// Largest index whose class has degree <= d, or -1.
int max_index_in_degree(SpaceId space, int d);

std::string_view space_name(SpaceId space);          // rp-inf, bspin2, ...
std::optional<SpaceId> parse_space(std::string_view name);
std::string class_name(SpaceClass c);                 // e_3, a_1, b_2, abar_0

// Terms (left, right) of the coproduct; std::nullopt stands for the unit 1.
// The unit only appears for the suspension classes abar_r, which are primitive.
using ClassOrUnit = std::optional<SpaceClass>;
std::vector<std::pair<ClassOrUnit, ClassOrUnit>> coproduct(SpaceClass c);

// Sq^k_* c as a list of classes (coefficients are mod 2, so at most one class).
std::vector<SpaceClass> steenrod_dual(int k, SpaceClass c);

enum class LambdaKind { Lambda, LambdaPrime, LambdaDoublePrime };
std::string_view lambda_name(LambdaKind kind);
// The Sq index used by a lambda operation on degree d, or nullopt if the parity does not match.
std::optional<int> lambda_index(LambdaKind kind, int degree);
// Lambda-family on a base class; the wrong parity gives zero.
std::vector<SpaceClass> lambda_base(LambdaKind kind, SpaceClass c);

}  // namespace dlcalc
