#include "dlcalc/space.hpp"

#include "dlcalc/binomial.hpp"

namespace dlcalc {

int base_degree(SpaceId space, int index)
{
    switch (space) {
    case SpaceId::RPinf: return index;
    case SpaceId::BSpin2: return 2 * index;
    case SpaceId::BSpin3: return 4 * index;
    case SpaceId::SigmaCPinf: return 2 * index + 1;
    }
    return 0;
}

int SpaceClass::degree() const
{
    return base_degree(space, index);
}

bool has_degree_zero_class(SpaceId space)
{
    return space != SpaceId::SigmaCPinf;
}

int max_index_in_degree(SpaceId space, int d)
{
    if (d < 0)
        return -1;
    switch (space) {
    case SpaceId::RPinf: return d;
    case SpaceId::BSpin2: return d / 2;
    case SpaceId::BSpin3: return d / 4;
    case SpaceId::SigmaCPinf: return d < 1 ? -1 : (d - 1) / 2;
    }
    return -1;
}

std::string_view space_name(SpaceId space)
{
    switch (space) {
    case SpaceId::RPinf: return "rp-inf";
    case SpaceId::BSpin2: return "bspin2";
    case SpaceId::BSpin3: return "bspin3";
    case SpaceId::SigmaCPinf: return "sigma-cp-inf";
    }
    return "?";
}

std::optional<SpaceId> parse_space(std::string_view name)
{
    for (SpaceId s : {SpaceId::RPinf, SpaceId::BSpin2, SpaceId::BSpin3, SpaceId::SigmaCPinf})
        if (space_name(s) == name)
            return s;
    return std::nullopt;
}

std::string class_name(SpaceClass c)
{
    const char* stem = "e_";
    switch (c.space) {
    case SpaceId::RPinf: stem = "e_"; break;
    case SpaceId::BSpin2: stem = "a_"; break;
    case SpaceId::BSpin3: stem = "b_"; break;
    case SpaceId::SigmaCPinf: stem = "abar_"; break;
    }
    return stem + std::to_string(c.index);
}

std::vector<std::pair<ClassOrUnit, ClassOrUnit>> coproduct(SpaceClass c)
{
    std::vector<std::pair<ClassOrUnit, ClassOrUnit>> out;
    if (c.space == SpaceId::SigmaCPinf) {
        out.emplace_back(c, std::nullopt);
        out.emplace_back(std::nullopt, c);
        return out;
    }
    for (int i = 0; i <= c.index; ++i)
        out.emplace_back(SpaceClass{c.space, i}, SpaceClass{c.space, c.index - i});
    return out;
}

std::vector<SpaceClass> steenrod_dual(int k, SpaceClass c)
{
    if (k < 0)
        return {};
    int n = c.index;
    int step = 1;
    switch (c.space) {
    case SpaceId::RPinf: step = 1; break;
    case SpaceId::BSpin2:
    case SpaceId::SigmaCPinf: step = 2; break;
    case SpaceId::BSpin3: step = 4; break;
    }
    if (k % step != 0)
        return {};
    int j = k / step;
    if (binom_mod2(n - j, j))
        return {SpaceClass{c.space, n - j}};
    return {};
}

std::string_view lambda_name(LambdaKind kind)
{
    switch (kind) {
    case LambdaKind::Lambda: return "lambda";
    case LambdaKind::LambdaPrime: return "lambda'";
    case LambdaKind::LambdaDoublePrime: return "lambda''";
    }
    return "?";
}

std::optional<int> lambda_index(LambdaKind kind, int degree)
{
    switch (kind) {
    case LambdaKind::Lambda:
        if (degree % 2 == 0)
            return degree / 2;
        break;
    case LambdaKind::LambdaPrime:
        if (degree % 2 == 1)
            return (degree - 1) / 2;
        break;
    case LambdaKind::LambdaDoublePrime:
        if (degree % 2 == 0 && degree >= 2)
            return (degree - 2) / 2;
        break;
    }
    return std::nullopt;
}

std::vector<SpaceClass> lambda_base(LambdaKind kind, SpaceClass c)
{
    auto k = lambda_index(kind, c.degree());
    if (!k)
        return {};
    return steenrod_dual(*k, c);
}

}  // namespace dlcalc
