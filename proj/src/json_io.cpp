#include "rooks/json_io.hpp"

#include <map>
#include <stdexcept>

namespace rooks {

namespace {

std::string trim(std::string s) {
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

Rational rational_field(const json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return ratio(v.get<std::int64_t>(), 1);
    throw std::invalid_argument("expected a rational string or an integer");
}

double double_field(const json& v) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
        const auto text = v.get<std::string>();
        if (text.find_first_of(".eE") != std::string::npos) return std::stod(text);
        return rational_field(v).get_d();
    }
    throw std::invalid_argument("expected a number");
}

template <class T>
T scalar(const json& v);
template <>
Rational scalar<Rational>(const json& v) { return rational_field(v); }
template <>
double scalar<double>(const json& v) { return double_field(v); }

// "p/q: value" or {"at": "p/q", "value": ...}.
template <class T>
std::pair<Rational, T> breakpoint_entry(const json& e) {
    if (e.is_object()) return {rational_field(e.at("at")), scalar<T>(e.at("value"))};
    if (!e.is_string()) throw std::invalid_argument("malformed breakpoint value entry");
    const auto text = e.get<std::string>();
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("breakpoint value entry needs 'point: value'");
    const json value = trim(text.substr(colon + 1));
    return {parse_rational(trim(text.substr(0, colon))), scalar<T>(value)};
}

template <class T>
BasicPiecewiseLinearFn<T> piecewise_from_json(const json& j) {
    std::vector<Rational> bps;
    for (const auto& b : j.value("breakpoints", json::array())) bps.push_back(rational_field(b));
    std::vector<LinearPiece<T>> pieces;
    for (const auto& p : j.at("pieces")) pieces.push_back({scalar<T>(p.at("slope")), scalar<T>(p.at("intercept"))});
    std::vector<std::optional<T>> values;
    if (j.contains("breakpoint_values")) {
        std::map<Rational, T> given;
        for (const auto& e : j.at("breakpoint_values")) {
            auto [at, value] = breakpoint_entry<T>(e);
            if (!given.emplace(at, value).second) throw std::invalid_argument("duplicate breakpoint value");
        }
        for (const auto& b : bps) {
            auto it = given.find(b);
            values.push_back(it == given.end() ? std::nullopt : std::optional<T>(it->second));
            if (it != given.end()) given.erase(it);
        }
        if (!given.empty()) throw std::invalid_argument("breakpoint value given at a point that is not a breakpoint");
    }
    std::optional<T> at_one;
    if (j.contains("value_at_one")) at_one = scalar<T>(j.at("value_at_one"));
    return BasicPiecewiseLinearFn<T>(std::move(bps), std::move(pieces), std::move(values), at_one);
}

// Schema errors surface as invalid_argument like every other bad input.
template <class F>
auto guarded(F&& parse) {
    try {
        return parse();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON payload: ") + e.what());
    }
}

}  // namespace

json to_json(const CombinatorialFn& f) { return {{"k", f.k()}, {"values", f.values()}, {"slopes", f.slopes()}}; }

CombinatorialFn combinatorial_fn_from_json(const json& j, std::optional<std::int64_t> k) {
    return guarded([&] {
        const auto values = j.at("values").get<std::vector<std::int64_t>>();
        const auto slopes = j.at("slopes").get<std::vector<std::int64_t>>();
        std::int64_t size = static_cast<std::int64_t>(values.size());
        if (j.contains("k")) size = j.at("k").get<std::int64_t>();
        if (k && *k != size) throw std::invalid_argument("k does not match the function data");
        return CombinatorialFn(size, values, slopes);
    });
}

json to_json(const PiecewiseLinearFn& f) {
    json out;
    out["breakpoints"] = json::array();
    for (const auto& b : f.breakpoints()) out["breakpoints"].push_back(format_rational(b));
    out["pieces"] = json::array();
    for (const auto& p : f.pieces())
        out["pieces"].push_back({{"slope", format_rational(p.slope)}, {"intercept", format_rational(p.intercept)}});
    out["breakpoint_values"] = json::array();
    for (std::size_t i = 0; i < f.breakpoints().size(); ++i)
        out["breakpoint_values"].push_back(format_rational(f.breakpoints()[i]) + ": " +
                                           format_rational(f.breakpoint_values()[i]));
    out["value_at_one"] = format_rational(f.value_at_one());
    return out;
}

json to_json(const FloatPiecewiseLinearFn& f) {
    json out;
    out["mode"] = "float";
    out["breakpoints"] = json::array();
    for (const auto& b : f.breakpoints()) out["breakpoints"].push_back(format_rational(b));
    out["pieces"] = json::array();
    for (const auto& p : f.pieces()) out["pieces"].push_back({{"slope", p.slope}, {"intercept", p.intercept}});
    out["breakpoint_values"] = json::array();
    for (std::size_t i = 0; i < f.breakpoints().size(); ++i)
        out["breakpoint_values"].push_back(
            {{"at", format_rational(f.breakpoints()[i])}, {"value", f.breakpoint_values()[i]}});
    out["value_at_one"] = f.value_at_one();
    return out;
}

PiecewiseLinearFn piecewise_fn_from_json(const json& j) {
    if (is_float_mode(j)) throw std::invalid_argument("float-mode payload given where exact data is required");
    return guarded([&] { return piecewise_from_json<Rational>(j); });
}

FloatPiecewiseLinearFn float_piecewise_fn_from_json(const json& j) {
    return guarded([&] { return piecewise_from_json<double>(j); });
}

bool is_float_mode(const json& j) { return j.contains("mode") && j.at("mode") == "float"; }

json to_json(const FunctionClasses& c) {
    return {{"piecewise_constant", c.piecewise_constant},
            {"continuous", c.continuous},
            {"motzkin", c.motzkin},
            {"schroder", c.schroder}};
}

json to_json(const DropTuple& t) { return t.y; }

json to_json(const MarginalMatrix& m) {
    json out = json::array();
    for (std::size_t i = 1; i <= m.n; ++i) {
        json row = json::array();
        for (std::size_t j = 1; j <= m.n; ++j) row.push_back(format_rational(m.at(i, j)));
        out.push_back(row);
    }
    return out;
}

}  // namespace rooks
