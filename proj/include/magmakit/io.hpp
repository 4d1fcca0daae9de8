#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "magmakit/magma.hpp"
#include "magmakit/nstructure.hpp"

namespace mk {

// '#' comments, a header of n names, then n rows of n names
Magma parse_cayley(std::string_view text, std::string_view source = "<input>");
Magma read_cayley(const std::string& path);
std::string emit_cayley(const Magma& m);

// family:size | ln-loop:n:m | zn:n:t:u[:class]
Magma generate(std::string_view spec, std::string_view prefix = {});

struct ManifestComponent {
    std::string label;
    std::string file;  // resolved against the manifest directory
    std::string gen;
    std::string prefix;
    std::size_t line = 0;
};

struct Manifest {
    std::vector<ManifestComponent> components;
    std::optional<NKind> expect;
};

Manifest parse_manifest(std::string_view text, std::string_view source = "<input>", std::string_view base_dir = {});
NStructure build(const Manifest& m);
NStructure load_manifest(const std::string& path);

// inverse of format_sub: "S3:{S3.123,S3.213};Z11:-"
SubNStructure parse_sub(const NStructure& ns, std::string_view text);

using Fields = std::vector<std::pair<std::string, std::string>>;

// "fact: k=v ..." lines closed by one "summary: ..." line
class Report {
public:
    void fact(Fields f) { facts_.push_back(std::move(f)); }
    void summary(Fields f) { summary_ = std::move(f); }
    const std::vector<Fields>& facts() const noexcept { return facts_; }
    const Fields& summary() const noexcept { return summary_; }
    std::string str() const;

private:
    std::vector<Fields> facts_;
    Fields summary_;
};

Report parse_report(std::string_view text);

// first value for key in a fact, or nullopt
std::optional<std::string> field(const Fields& f, std::string_view key);

}  // namespace mk
