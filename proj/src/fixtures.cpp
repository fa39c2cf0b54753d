#include "mu/fixtures.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace mu {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else
            cur += c;
    }
    if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
    return out;
}

std::string default_fixture_dir() {
#ifdef MU_FIXTURE_DIR
    return MU_FIXTURE_DIR;
#else
    return "fixtures";
#endif
}

bool FixtureSection::has(const std::string& key) const {
    return std::any_of(entries.begin(), entries.end(), [&](auto& e) { return e.key == key; });
}

const FixtureEntry& FixtureSection::entry(const std::string& key) const {
    for (auto& e : entries)
        if (e.key == key) return e;
    throw MuError("fixture [" + name + "] (" + file + ") has no '" + key + "'");
}

std::vector<const FixtureEntry*> FixtureSection::all(const std::string& key) const {
    std::vector<const FixtureEntry*> out;
    for (auto& e : entries)
        if (e.key == key) out.push_back(&e);
    return out;
}

Ring FixtureSection::ring() const { return make_ring(split_list(get("ring"))); }

static MultiPoly parse_at(const FixtureSection& s, const FixtureEntry& e, const std::string& text, const Ring& r) {
    try {
        return parse_poly(text, r);
    } catch (const MuError& err) {
        throw MuError(s.where(e) + ": " + err.what());
    }
}

MultiPoly FixtureSection::poly(const std::string& key, const Ring& r) const {
    auto& e = entry(key);
    return parse_at(*this, e, e.value, r);
}

std::vector<MultiPoly> FixtureSection::polys(const std::string& key, const Ring& r) const {
    std::vector<MultiPoly> out;
    for (auto* e : all(key)) out.push_back(parse_at(*this, *e, e->value, r));
    return out;
}

std::vector<MultiPoly> FixtureSection::poly_list(const std::string& key, const Ring& r) const {
    auto& e = entry(key);
    std::vector<MultiPoly> out;
    for (auto& t : split_list(e.value)) out.push_back(parse_at(*this, e, t, r));
    return out;
}

PolyMatrix FixtureSection::matrix(const std::string& key, const Ring& r) const {
    PolyMatrix M;
    for (auto* e : all(key)) {
        std::vector<MultiPoly> row;
        for (auto& t : split_list(e->value)) row.push_back(parse_at(*this, *e, t, r));
        if (!M.empty() && row.size() != M[0].size()) throw MuError(where(*e) + ": ragged matrix row");
        M.push_back(row);
    }
    return M;
}

std::vector<long> FixtureSection::ints(const std::string& key) const {
    std::vector<long> out;
    auto& e = entry(key);
    for (auto& t : split_list(e.value)) {
        try {
            out.push_back(std::stol(t));
        } catch (...) {
            throw MuError(where(e) + ": expected integers");
        }
    }
    return out;
}

void FixtureSet::add_text(const std::string& text, const std::string& file) {
    sources_[file] = text;
    std::istringstream in(text);
    std::string line;
    FixtureSection* cur = nullptr;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[') {
            if (t.back() != ']') throw MuError(file + ":" + std::to_string(n) + ": bad section header");
            std::string name = trim(t.substr(1, t.size() - 2));
            if (sections_.count(name)) throw MuError(file + ":" + std::to_string(n) + ": duplicate section " + name);
            cur = &sections_[name];
            cur->name = name;
            cur->file = file;
            cur->line = n;
            continue;
        }
        auto eq = t.find('=');
        if (!cur || eq == std::string::npos) throw MuError(file + ":" + std::to_string(n) + ": expected 'key = value'");
        cur->entries.push_back({trim(t.substr(0, eq)), trim(t.substr(eq + 1)), n});
    }
}

void FixtureSet::load_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw MuError("cannot read fixture file " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    add_text(ss.str(), std::filesystem::path(path).filename().string());
}

FixtureSet FixtureSet::load_dir(const std::string& dir) {
    FixtureSet fs;
    fs.dir_ = dir;
    if (!std::filesystem::is_directory(dir)) throw MuError("fixture directory not found: " + dir);
    std::vector<std::string> files;
    for (auto& e : std::filesystem::directory_iterator(dir))
        if (e.path().extension() == ".txt") files.push_back(e.path().string());
    std::sort(files.begin(), files.end());
    for (auto& f : files) fs.load_file(f);
    return fs;
}

const FixtureSection& FixtureSet::at(const std::string& name) const {
    auto it = sections_.find(name);
    if (it == sections_.end()) throw MuError("no fixture named '" + name + "'");
    return it->second;
}

std::vector<std::string> FixtureSet::names() const {
    std::vector<std::string> out;
    for (auto& [k, v] : sections_) out.push_back(k);
    return out;
}

}  // namespace mu
