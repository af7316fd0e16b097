#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "adp/core_model.hpp"

namespace adp {

/// On-disk instance document: named variables with raw (untranslated) values.
struct InstanceDoc {
    std::vector<std::string> names;
    std::vector<std::vector<int64_t>> domains;   // explicit values (ranges expanded)
    std::vector<bool> is_range;                  // serialization hint
    std::vector<std::pair<int, int>> precedences;
    std::map<std::string, std::string> meta;

    int var_index(const std::string& name) const; // -1 when unknown
    Instance to_instance() const { return build_instance(domains, precedences); }
};

InstanceDoc doc_from_instance(const Instance& inst, std::vector<std::string> names = {});

/// Line-oriented text format, version-tagged; a JSON mirror of the same
/// document is accepted on input (detected by a leading '{').
InstanceDoc parse_instance(std::istream& in);
InstanceDoc parse_instance_text(const std::string& text);
std::string serialize_instance(const InstanceDoc& doc);
std::string serialize_instance_json(const InstanceDoc& doc);

} // namespace adp
