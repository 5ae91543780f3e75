#include <openssl/evp.h>

#include <fstream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "sesforge/io/turtle.hpp"
#include "sesforge/store/registry.hpp"

namespace sesforge::store {

namespace fs = std::filesystem;

namespace {

constexpr const char* kManifest = "manifest.txt";

struct Part {
    std::string id;  // "tbox", "globals", "frameworks/<id>", "cases/<id>"
    std::string text;
};

std::vector<Part> render(const Registry& reg) {
    const auto builtins = rdf::PrefixMap::with_builtins(reg.namespaces());
    std::vector<Part> parts;
    parts.push_back({"tbox", io::serialize_turtle(reg.tbox(), builtins)});
    parts.push_back({"globals", io::serialize_turtle(reg.globals(), builtins)});
    for (const auto& [id, g] : reg.frameworks()) {
        parts.push_back({"frameworks/" + id, io::serialize_turtle(g, reg.framework_prefixes(id))});
    }
    for (const auto& [id, g] : reg.cases()) {
        parts.push_back({"cases/" + id, io::serialize_turtle(g, reg.case_prefixes(id))});
    }
    return parts;
}

std::string manifest_text(const std::vector<Part>& parts) {
    std::string out;
    for (const auto& p : parts) out += p.id + "\t" + sha256_hex(p.text) + "\n";
    return out;
}

void write_atomic(const fs::path& path, const std::string& content) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw Error("cannot write " + tmp.string());
    }
    fs::rename(tmp, path);
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw RegistryError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Stale .ttl files of partitions that no longer exist.
void remove_stale(const fs::path& dir, const std::set<std::string>& keep) {
    if (!fs::is_directory(dir)) return;
    for (const auto& entry : fs::directory_iterator(dir)) {
        const auto& p = entry.path();
        if (p.extension() != ".ttl") continue;
        if (!keep.contains(p.stem().string())) fs::remove(p);
    }
}

} // namespace

std::string sha256_hex(std::string_view data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
        throw Error("sha256 failed");
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (unsigned int i = 0; i < len; ++i) {
        out += kHex[md[i] >> 4];
        out += kHex[md[i] & 0xF];
    }
    return out;
}

std::string manifest(const Registry& reg) { return manifest_text(render(reg)); }

void save(const Registry& reg, const fs::path& dir) {
    fs::create_directories(dir / "frameworks");
    fs::create_directories(dir / "cases");
    const auto parts = render(reg);
    for (const auto& p : parts) write_atomic(dir / (p.id + ".ttl"), p.text);
    write_atomic(dir / kManifest, manifest_text(parts));

    std::set<std::string> fw, cs;
    for (const auto& [id, g] : reg.frameworks()) fw.insert(id);
    for (const auto& [id, g] : reg.cases()) cs.insert(id);
    remove_stale(dir / "frameworks", fw);
    remove_stale(dir / "cases", cs);
}

Registry load(const fs::path& dir, const rdf::Namespaces& ns) {
    const fs::path manifest_path = dir / kManifest;
    if (!fs::exists(manifest_path)) {
        if (!fs::exists(dir) || fs::is_empty(dir)) return Registry(ns);
        throw RegistryError(manifest_path.string() + ": missing manifest");
    }

    const auto builtins = rdf::PrefixMap::with_builtins(ns);
    io::TurtleOptions opts;
    opts.skolem_ns = ns.skolem;

    rdf::Graph tbox, globals;
    std::map<std::string, rdf::Graph> frameworks, cases;
    bool have_tbox = false;

    std::istringstream lines(read_file(manifest_path));
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos) {
            throw RegistryError(manifest_path.string() + ":" + std::to_string(lineno) +
                                ": expected 'id<TAB>sha256'");
        }
        const std::string id = line.substr(0, tab);
        const std::string digest = line.substr(tab + 1);
        const fs::path file = dir / (id + ".ttl");
        const std::string text = read_file(file);

        rdf::Graph g;
        try {
            g = io::parse_turtle(text, builtins, opts);
        } catch (const ParseError& e) {
            throw RegistryError(file.string() + ":" + std::to_string(e.line()) + ": " + e.message());
        }
        if (sha256_hex(text) != digest) {
            throw RegistryError(file.string() + ": content does not match manifest hash");
        }

        if (id == "tbox") {
            tbox = std::move(g);
            have_tbox = true;
        } else if (id == "globals") {
            globals = std::move(g);
        } else if (id.starts_with("frameworks/")) {
            frameworks.emplace(id.substr(11), std::move(g));
        } else if (id.starts_with("cases/") && is_valid_case_id(id.substr(6))) {
            cases.emplace(id.substr(6), std::move(g));
        } else {
            throw RegistryError(manifest_path.string() + ":" + std::to_string(lineno) +
                                ": unknown partition '" + id + "'");
        }
    }

    Registry reg(ns);
    if (!have_tbox) tbox = reg.tbox();
    reg.assign(std::move(tbox), std::move(globals), std::move(frameworks), std::move(cases));
    return reg;
}

} // namespace sesforge::store
