#include "motivol/render.hpp"

#include <json.hpp>

#include <sstream>

namespace motivol {

namespace {

std::string class_function_str(const ClassFunction& cf)
{
    bool constant = true;
    const Rat& first = cf.values().front();
    for (const Rat& v : cf.values()) constant = constant && v == first;
    if (constant) return rat_to_string(first);
    std::string s = "(";
    for (size_t i = 0; i < cf.values().size(); ++i) {
        if (i) s += ",";
        s += rat_to_string(cf.values()[i]);
    }
    return s + ")";
}

std::string term_str(const CohClass::Key& key, const ClassFunction& cf)
{
    std::vector<std::string> parts;
    std::string c = class_function_str(cf);
    if (c != "1" || (key.tate == 0 && key.tags.empty())) parts.push_back(c);
    if (key.tate != 0) {
        std::string l = "ℓ";  // the Lefschetz class
        if (key.tate != 1) l += "^" + std::to_string(key.tate);
        parts.push_back(l);
    }
    for (const auto& [name, e] : key.tags) {
        std::string t = name;
        if (e != 1) t += "^" + std::to_string(e);
        parts.push_back(t);
    }
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += " ";
        out += parts[i];
    }
    return out;
}

}  // namespace

std::string to_string(const CohClass& c)
{
    if (c.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, cf] : c.terms()) {
        if (!first) out += " + ";
        first = false;
        out += term_str(key, cf);
    }
    return out;
}

std::string to_string(const CohTail& t)
{
    if (t.terms().empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = t.terms().rbegin(); it != t.terms().rend(); ++it) {
        if (!first) out += " + ";
        first = false;
        std::string coeff = to_string(it->second);
        bool composite = coeff.find(" + ") != std::string::npos;
        if (composite) coeff = "(" + coeff + ")";
        if (it->first == 0) {
            out += coeff;
        } else {
            if (coeff != "1") out += coeff + " ";
            out += "u^" + std::to_string(it->first);
        }
    }
    return out;
}

std::string render_series_table(const TruncatedSeries<Rat>& s)
{
    std::ostringstream os;
    for (int n = 0; n <= s.precision(); ++n) os << "t^" << n << ": " << rat_to_string(s[n]) << "\n";
    return os.str();
}

std::string render_tail_series_table(const CohTailSeries& s)
{
    std::ostringstream os;
    for (int n = 0; n <= s.precision(); ++n) os << "t^" << n << ": " << to_string(s[n]) << "\n";
    return os.str();
}

std::string render_volume_text(const VolumeReport& r, int digits)
{
    std::ostringstream os;
    for (const auto& w : r.warnings) os << "warning: " << w << "\n";
    os << "depth  factor-base        exponent  partial\n";
    for (const auto& e : r.entries) {
        os << e.depth << "  " << rat_to_string(e.base) << "  " << e.exponent.str() << "  "
           << rat_to_decimal(e.partial, digits) << "\n";
    }
    os << "volume = " << rat_to_decimal(r.value, digits) << " (" << rat_to_string(r.value) << ")\n";
    os << "tail_bound <= " << rat_to_decimal(r.tail_bound, 3) << "\n";
    for (const auto& c : r.certificates) os << "certificate: " << c << "\n";
    return os.str();
}

std::string render_volume_json(const VolumeReport& r, int digits)
{
    nlohmann::json j;
    j["mode"] = r.mode;
    j["partial"] = nlohmann::json::array();
    for (const auto& e : r.entries)
        j["partial"].push_back({{"depth", e.depth},
                                {"rational", rat_to_string(e.partial)},
                                {"decimal", rat_to_decimal(e.partial, digits)},
                                {"factor_base", rat_to_string(e.base)},
                                {"factor_exponent", e.exponent.str()}});
    j["value"] = rat_to_string(r.value);
    j["decimal"] = rat_to_decimal(r.value, digits);
    j["tail_bound"] = rat_to_string(r.tail_bound);
    j["certificates"] = r.certificates;
    j["warnings"] = r.warnings;
    return j.dump(2) + "\n";
}

std::string render_motivic_text(const MotivicVolume& v)
{
    std::ostringstream os;
    os << "leading exponent: u^" << v.leading_exponent << ", window " << v.window << "\n";
    const auto& terms = v.series.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it)
        os << "u^" << it->first << ": " << to_string(it->second) << "\n";
    os << "certificates: deg_u(term_P - 1) <= -3n for n <= " << v.certificates.size() << "\n";
    return os.str();
}

std::string render_motivic_json(const MotivicVolume& v)
{
    nlohmann::json j;
    j["mode"] = "motivic";
    j["leading_exponent"] = v.leading_exponent;
    j["window"] = v.window;
    j["terms"] = nlohmann::json::array();
    const auto& terms = v.series.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it)
        j["terms"].push_back({{"u_exponent", it->first}, {"class", to_string(it->second)}});
    j["certificates"] = nlohmann::json::array();
    for (const auto& c : v.certificates)
        j["certificates"].push_back({{"n", c.n},
                                     {"term_degree", c.term_degree},
                                     {"bound", c.bound},
                                     {"psi_degree", c.psi_degree},
                                     {"pass", c.pass}});
    return j.dump(2) + "\n";
}

}  // namespace motivol
