#include "cihomol/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cihomol {

using nlohmann::json;

namespace {

[[noreturn]] void spec_error(const std::string& what, std::size_t pos) {
    throw std::invalid_argument("ring spec: " + what + " at position " + std::to_string(pos));
}

std::uint64_t parse_uint(const std::string& s, std::size_t& pos) {
    if (pos >= s.size() || !isdigit(static_cast<unsigned char>(s[pos])))
        spec_error("expected a digit", pos);
    std::uint64_t v = 0;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) {
        v = v * 10 + (s[pos] - '0');
        if (v > (std::uint64_t{1} << 40)) spec_error("number too large", pos);
        ++pos;
    }
    return v;
}

void expect(const std::string& s, std::size_t& pos, const std::string& lit) {
    if (s.compare(pos, lit.size(), lit) != 0) spec_error("expected '" + lit + "'", pos);
    pos += lit.size();
}

} // namespace

Ring parse_ring_spec(const std::string& spec) {
    std::size_t pos = 0;
    expect(spec, pos, "p=");
    std::uint64_t p = parse_uint(spec, pos);
    expect(spec, pos, ";exps=");
    std::vector<unsigned> exps;
    for (;;) {
        std::size_t at = pos;
        std::uint64_t a = parse_uint(spec, pos);
        if (a < 2) spec_error("exponent must be >= 2", at);
        exps.push_back(static_cast<unsigned>(a));
        if (pos == spec.size()) break;
        expect(spec, pos, ",");
    }
    if (!is_prime(p)) throw std::invalid_argument("ring spec: p=" + std::to_string(p) +
                                                  " is not prime");
    return Ring(Fp(p), std::move(exps));
}

std::string module_to_json(const Module& m) {
    json j;
    j["ring"] = m.ring().spec_string();
    j["dim"] = m.dim();
    json actions = json::array();
    for (const Mat& a : m.actions()) {
        json entries = json::array();
        for (auto e : a.entries()) entries.push_back(e);
        actions.push_back(std::move(entries));
    }
    j["actions"] = std::move(actions);
    return j.dump() + "\n";
}

Module module_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("module file: ") + e.what());
    }
    if (!j.is_object() || !j.contains("ring") || !j.contains("dim") || !j.contains("actions"))
        throw std::invalid_argument("module file: expected ring, dim and actions fields");
    Ring ring = parse_ring_spec(j["ring"].get<std::string>());
    std::size_t dim = j["dim"].get<std::size_t>();
    const json& actions = j["actions"];
    if (!actions.is_array() || actions.size() != ring.codim())
        throw std::invalid_argument("module file: expected " + std::to_string(ring.codim()) +
                                    " action arrays");
    const std::uint64_t p = ring.field().p();
    std::vector<Mat> mats;
    for (std::size_t i = 0; i < actions.size(); ++i) {
        const json& arr = actions[i];
        if (!arr.is_array() || arr.size() != dim * dim)
            throw std::invalid_argument("module file: action " + std::to_string(i) +
                                        " must have dim*dim = " + std::to_string(dim * dim) +
                                        " entries");
        Mat a(ring.field(), dim, dim);
        for (std::size_t k = 0; k < arr.size(); ++k) {
            std::uint64_t v = arr[k].get<std::uint64_t>();
            if (v >= p)
                throw std::invalid_argument("module file: action " + std::to_string(i) +
                                            " entry " + std::to_string(k) +
                                            " is not reduced mod " + std::to_string(p));
            a.set(k / dim, k % dim, v);
        }
        mats.push_back(std::move(a));
    }
    return Module::make(std::move(ring), std::move(mats)); // validates invariants
}

Module load_module(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open module file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return module_from_json(buf.str());
}

void save_module(const Module& m, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::invalid_argument("cannot write module file: " + path.string());
    out << module_to_json(m);
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string content_hash(const Module& m) {
    std::uint64_t h = fnv1a(module_to_json(m));
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace cihomol
