#include "cihomol/gk.hpp"

#include <numeric>
#include <sstream>

#include <json.hpp>

#include "cihomol/serialize.hpp"

namespace cihomol {

GClass gclass(const Module& m) {
    std::uint64_t la = m.ring().length();
    return {m.length() % la, la};
}

SubgroupInfo subgroup_of_lengths(const Ring& ring, std::span<const Module> family) {
    std::uint64_t g = ring.length();
    for (const Module& m : family) {
        if (!(m.ring() == ring))
            throw std::invalid_argument("subgroup_of_lengths: mixed rings");
        g = std::gcd(g, static_cast<std::uint64_t>(m.length()));
    }
    return {g, g};
}

DivisibilityReport divisibility_report(const Ring& ring, std::span<const Module> family,
                                       std::uint64_t d) {
    if (d < 2) throw std::invalid_argument("divisibility_report: divisor must be >= 2");
    DivisibilityReport rep{d, ring.length(), {}, true, {}};
    for (const Module& m : family) {
        if (!(m.ring() == ring))
            throw std::invalid_argument("divisibility_report: mixed rings");
        DivisibilityRow row{content_hash(m), m.length(), gclass(m).value,
                            m.length() % d == 0};
        if (!row.pass) {
            rep.pass = false;
            rep.failures.push_back(row.hash);
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

std::string divisibility_to_json(const DivisibilityReport& r) {
    nlohmann::json j;
    j["divisor"] = r.divisor;
    j["modulus"] = r.modulus;
    j["pass"] = r.pass;
    j["failures"] = r.failures;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.rows) {
        nlohmann::json o;
        o["hash"] = row.hash;
        o["length"] = row.length;
        o["class"] = row.gclass_value;
        o["verdict"] = row.pass ? "pass" : "fail";
        rows.push_back(std::move(o));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

std::string divisibility_to_csv(const DivisibilityReport& r) {
    std::ostringstream os;
    os << "hash,length,class,verdict\n";
    for (const auto& row : r.rows)
        os << row.hash << ',' << row.length << ',' << row.gclass_value << ','
           << (row.pass ? "pass" : "fail") << '\n';
    return os.str();
}

} // namespace cihomol
