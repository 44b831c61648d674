#ifndef PCPFORGE_CSP_SERIALIZE_HPP
#define PCPFORGE_CSP_SERIALIZE_HPP

#include <string>

#include "json.hpp"
#include "pcpforge/csp/instance.hpp"

namespace pcpforge {

// Canonical byte-deterministic form: variables sorted by id, edges sorted by
// (tuple, relation fingerprint, weight, mult), compact JSON with sorted keys.
std::string serialize(const Instance& inst);
Instance deserialize(const std::string& text);

nlohmann::json relation_to_json(const Relation& r);
RelationPtr relation_from_json(const nlohmann::json& j);

nlohmann::json label_value_to_json(const LabelValue& v);
LabelValue label_value_from_json(const nlohmann::json& j);

std::string serialize_assignment(const Assignment& a);
Assignment deserialize_assignment(const std::string& text);

// Canonicalized structural equality (serialized bytes compare equal).
bool instances_equal(const Instance& a, const Instance& b);

// FNV-1a 64 over the canonical bytes, hex-encoded.
std::string content_hash(const std::string& bytes);

void write_file(const std::string& path, const std::string& bytes);
std::string read_file(const std::string& path);

}  // namespace pcpforge

#endif
