#pragma once
// Printed data as text fixtures:
//   [section]
//   ring = x, y
//   key = value      (keys may repeat; '#' starts a comment line)

#include <map>
#include <string>
#include <vector>

#include "mu/poly.hpp"
#include "mu/skew_net.hpp"

namespace mu {

struct FixtureEntry {
    std::string key, value;
    int line = 0;
};

struct FixtureSection {
    std::string name, file;
    int line = 0;
    std::vector<FixtureEntry> entries;

    bool has(const std::string& key) const;
    const FixtureEntry& entry(const std::string& key) const;  // first occurrence
    std::string get(const std::string& key) const { return entry(key).value; }
    std::vector<const FixtureEntry*> all(const std::string& key) const;
    std::string where(const FixtureEntry& e) const { return file + ":" + std::to_string(e.line); }

    Ring ring() const;  // from "ring = ..."
    MultiPoly poly(const std::string& key, const Ring& r) const;
    std::vector<MultiPoly> polys(const std::string& key, const Ring& r) const;  // one per repeated key
    std::vector<MultiPoly> poly_list(const std::string& key, const Ring& r) const;  // comma list on one line
    PolyMatrix matrix(const std::string& key, const Ring& r) const;  // repeated comma-list rows
    std::vector<long> ints(const std::string& key) const;
};

class FixtureSet {
public:
    static FixtureSet load_dir(const std::string& dir);
    void load_file(const std::string& path);
    void add_text(const std::string& text, const std::string& file);

    bool has(const std::string& name) const { return sections_.count(name) > 0; }
    const FixtureSection& at(const std::string& name) const;
    std::vector<std::string> names() const;
    // file name -> contents, sorted; used for cache keys
    const std::map<std::string, std::string>& sources() const { return sources_; }
    const std::string& dir() const { return dir_; }

private:
    std::string dir_;
    std::map<std::string, FixtureSection> sections_;
    std::map<std::string, std::string> sources_;
};

std::vector<std::string> split_list(const std::string& s, char sep = ',');
std::string trim(const std::string& s);
std::string default_fixture_dir();

}  // namespace mu
