#include "grpdeg/specio.hpp"

#include "json.hpp"

#include "grpdeg/errors.hpp"

namespace grpdeg {

namespace {

using nlohmann::ordered_json;

ordered_json to_json(const GroupSpec& spec) {
    return std::visit(
        [](const auto& s) -> ordered_json {
            using T = std::decay_t<decltype(s)>;
            ordered_json j;
            if constexpr (std::is_same_v<T, GroupSpec::Cyclic>) {
                j["family"] = "cyclic";
                j["n"] = s.n;
            } else if constexpr (std::is_same_v<T, GroupSpec::AbelianProduct>) {
                j["family"] = "abelian";
                j["orders"] = s.orders;
            } else if constexpr (std::is_same_v<T, GroupSpec::Dihedral>) {
                j["family"] = "dihedral";
                j["n"] = s.n;
            } else if constexpr (std::is_same_v<T, GroupSpec::Dicyclic>) {
                j["family"] = "dicyclic";
                j["n"] = s.n;
            } else if constexpr (std::is_same_v<T, GroupSpec::GeneralizedQuaternion>) {
                j["family"] = "quaternion";
                j["m"] = s.m;
            } else if constexpr (std::is_same_v<T, GroupSpec::GeneralizedDicyclic>) {
                j["family"] = "gendicyclic";
                j["n"] = s.n;
                j["gamma_sq"] = gamma_square_token(s.gamma_sq);
            } else {
                static_assert(std::is_same_v<T, GroupSpec::DirectProduct>);
                j["family"] = "product";
                j["left"] = to_json(*s.left);
                j["right"] = to_json(*s.right);
            }
            return j;
        },
        spec.v);
}

long get_long(const ordered_json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw DomainError(std::string("spec json: missing integer field '") + key + "'");
    return j[key].get<long>();
}

GroupSpec from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
        throw DomainError("spec json: expected an object with a 'family' string");
    std::string family = j["family"].get<std::string>();
    GroupSpec spec = [&] {
        if (family == "cyclic") return GroupSpec::cyclic(get_long(j, "n"));
        if (family == "abelian") {
            if (!j.contains("orders") || !j["orders"].is_array())
                throw DomainError("spec json: abelian family needs an 'orders' array");
            std::vector<long> orders;
            for (const auto& v : j["orders"]) {
                if (!v.is_number_integer())
                    throw DomainError("spec json: 'orders' entries must be integers");
                orders.push_back(v.get<long>());
            }
            return GroupSpec::abelian(std::move(orders));
        }
        if (family == "dihedral") return GroupSpec::dihedral(get_long(j, "n"));
        if (family == "dicyclic") return GroupSpec::dicyclic(get_long(j, "n"));
        if (family == "quaternion")
            return GroupSpec::generalized_quaternion(static_cast<int>(get_long(j, "m")));
        if (family == "gendicyclic") {
            if (!j.contains("gamma_sq") || !j["gamma_sq"].is_string())
                throw DomainError("spec json: gendicyclic family needs a 'gamma_sq' string");
            return GroupSpec::generalized_dicyclic(
                get_long(j, "n"), parse_gamma_square(j["gamma_sq"].get<std::string>()));
        }
        if (family == "product") {
            if (!j.contains("left") || !j.contains("right"))
                throw DomainError("spec json: product family needs 'left' and 'right'");
            return GroupSpec::direct_product(from_json(j["left"]), from_json(j["right"]));
        }
        throw DomainError("spec json: unknown family '" + family + "'");
    }();
    spec.order();  // validate parameter domains eagerly
    return spec;
}

}  // namespace

std::string spec_to_json(const GroupSpec& spec) { return to_json(spec).dump(); }

GroupSpec spec_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) throw DomainError("spec json: parse error");
    return from_json(j);
}

}  // namespace grpdeg
