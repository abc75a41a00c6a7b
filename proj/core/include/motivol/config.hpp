#ifndef MOTIVOL_CONFIG_HPP
#define MOTIVOL_CONFIG_HPP

#include "motivol/classical.hpp"
#include "motivol/profile.hpp"

#include <json.hpp>

#include <map>
#include <set>
#include <string>

namespace motivol {

// configuration problems exit with the usage code (2), not the invariant code
struct config_error : error {
    using error::error;
};

// Key-value run configuration: a TOML-style `key = value` file where values
// are scalars or inline JSON, merged with command-line overrides. Unknown
// keys are rejected per command.
class RunConfig {
public:
    RunConfig() = default;
    static RunConfig from_file(const std::string& path);

    void set(const std::string& key, const nlohmann::json& value);
    void set_raw(const std::string& key, const std::string& raw);  // parses like a file value

    bool has(const std::string& key) const { return kv_.count(key) != 0; }
    const nlohmann::json& at(const std::string& key) const;

    std::string str(const std::string& key) const;
    std::string str_or(const std::string& key, const std::string& fallback) const;
    long integer(const std::string& key) const;
    long integer_or(const std::string& key, long fallback) const;
    Rat rational(const std::string& key) const;
    Rat rational_or(const std::string& key, const Rat& fallback) const;

    // every present key must be in the allowed set
    void restrict_keys(const std::set<std::string>& allowed) const;

    const std::map<std::string, nlohmann::json>& entries() const { return kv_; }

private:
    std::map<std::string, nlohmann::json> kv_;
};

// {"cyclic": n} | {"perm_gens": [[...]]} | {"table": [[...]]}, optional "frobenius"
GroupPtr parse_group(const nlohmann::json& spec);

// tag registry entries {"name","weight","dim","trace":{a,q}|[values],"exterior":[[term...]]}
MotiveTag parse_tag(const nlohmann::json& spec);

// profile: {"dim": d, "genus": g?, "entries": [{"i": i, "entry": e}]} with
// e in {"one"} | {"lefschetz_power": j} | {"character": {"name": .., "twist": j}}
//      | {"tag": name}
CohProfile parse_profile(const nlohmann::json& spec, GroupPtr group,
                         const std::shared_ptr<TagRegistry>& registry);

// curve {kind: "p1" | "elliptic" | "counts" | "point", q, a?, counts?, genus?}
CurveCounts parse_curve(const nlohmann::json& spec);

// "trivial" | "sign" | "regular" | {"trivial_rank": d}
MatrixRep parse_rep(const nlohmann::json& spec, GroupPtr group);

}  // namespace motivol

#endif
