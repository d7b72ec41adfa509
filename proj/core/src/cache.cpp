#include "cihomol/cache.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cihomol/serialize.hpp"

namespace cihomol {

using nlohmann::json;

namespace {

constexpr const char* kFormat = "cihomol-cache/1";

json mat_to_json(const Mat& m) {
    json a = json::array();
    for (auto e : m.entries()) a.push_back(e);
    return a;
}

Mat mat_from_json(const json& a, Fp f, std::size_t rows, std::size_t cols) {
    if (!a.is_array() || a.size() != rows * cols)
        throw std::invalid_argument("cache: matrix entry count mismatch");
    Mat m(f, rows, cols);
    for (std::size_t k = 0; k < a.size(); ++k) {
        std::uint64_t v = a[k].get<std::uint64_t>();
        if (v >= f.p()) throw std::invalid_argument("cache: entry not reduced");
        m.set(k / cols, k % cols, v);
    }
    return m;
}

} // namespace

Cache::Cache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(*dir_);
}

std::optional<Resolution> Cache::lookup(const Module& m) {
    std::string hash = content_hash(m);
    auto it = memo_.find(hash);
    if (it != memo_.end() && it->second.target() == m) return it->second;
    if (dir_) {
        auto r = load_disk(m, hash);
        if (r) {
            memo_.erase(hash);
            memo_.emplace(hash, *r);
            return r;
        }
    }
    return std::nullopt;
}

void Cache::store(const Module& m, const Resolution& r) {
    std::string hash = content_hash(m);
    memo_.erase(hash);
    memo_.emplace(hash, r);
    if (dir_) store_disk(m, r, hash);
}

std::optional<Resolution> Cache::load_disk(const Module& m, const std::string& hash) {
    std::filesystem::path file = *dir_ / (hash + ".json");
    std::ifstream in(file);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    try {
        json j = json::parse(text);
        if (j.value("format", "") != kFormat) return std::nullopt;
        // checksum covers everything but itself
        json body = j;
        body.erase("checksum");
        if (j.value("checksum", "") != std::to_string(fnv1a(body.dump()))) return std::nullopt;
        Module stored = module_from_json(j.at("module").get<std::string>());
        if (!(stored == m)) return std::nullopt;

        const Ring& ring = m.ring();
        const Fp f = ring.field();
        const std::size_t la = ring.length();
        std::vector<std::size_t> betti = j.at("betti").get<std::vector<std::size_t>>();
        std::vector<ModuleMap> covers, inclusions;
        std::vector<Module> syzygies{m};
        const json& levels = j.at("levels");
        if (!levels.is_array() || levels.size() != betti.size()) return std::nullopt;
        for (std::size_t i = 0; i < levels.size(); ++i) {
            const json& lv = levels[i];
            Module cur = syzygies.back();
            Module free = free_module(ring, betti[i]);
            Mat cov = mat_from_json(lv.at("cover"), f, cur.dim(), betti[i] * la);
            Module syz = module_from_json(lv.at("syzygy").get<std::string>());
            Mat inc = mat_from_json(lv.at("inclusion"), f, betti[i] * la, syz.dim());
            covers.push_back(ModuleMap(free, cur, std::move(cov)));
            inclusions.push_back(ModuleMap(syz, free, std::move(inc)));
            syzygies.push_back(std::move(syz));
        }
        return Resolution::assemble(m, std::move(covers), std::move(syzygies),
                                    std::move(inclusions), std::move(betti));
    } catch (const std::exception&) {
        return std::nullopt; // malformed entry behaves as a miss
    }
}

void Cache::store_disk(const Module& m, const Resolution& r, const std::string& hash) {
    json j;
    j["format"] = kFormat;
    j["module"] = module_to_json(m);
    j["betti"] = r.betti();
    json levels = json::array();
    for (std::size_t i = 0; i <= r.degree(); ++i) {
        json lv;
        lv["cover"] = mat_to_json(r.cover(i).mat());
        lv["syzygy"] = module_to_json(r.syzygy_module(i + 1));
        lv["inclusion"] = mat_to_json(r.inclusion(i).mat());
        levels.push_back(std::move(lv));
    }
    j["levels"] = std::move(levels);
    j["checksum"] = std::to_string(fnv1a(j.dump()));
    std::ofstream out(*dir_ / (hash + ".json"), std::ios::trunc);
    out << j.dump() << "\n";
}

std::size_t Cache::gc() {
    if (!dir_) return 0;
    std::size_t removed = 0;
    std::vector<std::filesystem::path> doomed;
    for (const auto& entry : std::filesystem::directory_iterator(*dir_)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
        bool ok = false;
        try {
            std::ifstream in(entry.path());
            std::ostringstream buf;
            buf << in.rdbuf();
            json j = json::parse(buf.str());
            if (j.value("format", "") == kFormat) {
                json body = j;
                body.erase("checksum");
                if (j.value("checksum", "") == std::to_string(fnv1a(body.dump()))) {
                    Module stored = module_from_json(j.at("module").get<std::string>());
                    ok = entry.path().filename() == (content_hash(stored) + ".json");
                }
            }
        } catch (const std::exception&) {
            ok = false;
        }
        if (!ok) doomed.push_back(entry.path());
    }
    for (const auto& p : doomed) {
        std::filesystem::remove(p);
        ++removed;
    }
    return removed;
}

} // namespace cihomol
