#pragma once

// Text formats: the JSON BPA document schema and CSV/JSON emission of
// distributions and sweep tables.
//
// BPA schema:
//   {"frame": ["a","b","c"],
//    "masses": {"a": 0.3, "a,b": 0.1, ...},
//    "metadata": {"name": "...", "source": "..."}}   // optional
//
// Focal-set keys are comma-separated frame labels; "" or "{}" denotes
// the empty set. Duplicate focal-set keys are an error, which is why
// parsing goes through SAX rather than a plain json object (object
// containers silently collapse duplicate keys).

#include <cctype>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mulp/core.hpp"
#include "mulp/transforms.hpp"

namespace mulp {

struct BpaMetadata {
  std::optional<std::string> name;
  std::optional<std::string> source;
};

// Raw parse result before core validation.
struct BpaDocument {
  std::vector<std::string> frame_labels;
  std::vector<std::pair<std::string, double>> masses;  // key order preserved
  BpaMetadata metadata;
};

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Splits a focal-set key into member labels; "" and "{}" mean the empty set.
inline std::vector<std::string> split_focal_key(std::string_view key) {
  const std::string trimmed = trim(key);
  if (trimmed.empty() || trimmed == "{}") return {};
  std::vector<std::string> members;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = trimmed.find(',', start);
    members.push_back(trim(std::string_view(trimmed).substr(
        start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return members;
}

// SAX consumer for the BPA document; keeps every masses entry so
// duplicate keys survive to validation.
class BpaSax : public nlohmann::json::json_sax_t {
 public:
  BpaDocument doc;

  bool null() override { return fail("unexpected null"); }
  bool boolean(bool) override { return fail("unexpected boolean"); }

  bool number_integer(number_integer_t v) override {
    return number(static_cast<double>(v));
  }
  bool number_unsigned(number_unsigned_t v) override {
    return number(static_cast<double>(v));
  }
  bool number_float(number_float_t v, const string_t&) override {
    return number(v);
  }

  bool string(string_t& val) override {
    switch (where_) {
      case Where::FrameArray:
        doc.frame_labels.push_back(val);
        return true;
      case Where::MetadataObject:
        if (pending_key_ == "name") doc.metadata.name = val;
        if (pending_key_ == "source") doc.metadata.source = val;
        return true;
      default:
        return fail("unexpected string value");
    }
  }

  bool binary(binary_t&) override { return fail("unexpected binary value"); }

  bool start_object(std::size_t) override {
    ++depth_;
    if (depth_ == 1) return true;
    if (depth_ == 2 && where_ == Where::Root) {
      if (pending_key_ == "masses") {
        where_ = Where::MassesObject;
        seen_masses_ = true;
        return true;
      }
      if (pending_key_ == "metadata") {
        where_ = Where::MetadataObject;
        return true;
      }
    }
    return fail("unexpected object");
  }

  bool end_object() override {
    --depth_;
    if (depth_ == 1) where_ = Where::Root;
    return true;
  }

  bool start_array(std::size_t) override {
    if (depth_ == 1 && where_ == Where::Root && pending_key_ == "frame") {
      where_ = Where::FrameArray;
      seen_frame_ = true;
      return true;
    }
    return fail("unexpected array");
  }

  bool end_array() override {
    where_ = Where::Root;
    return true;
  }

  bool key(string_t& val) override {
    pending_key_ = val;
    if (depth_ == 1 && where_ == Where::Root && val != "frame" &&
        val != "masses" && val != "metadata")
      return fail("unknown top-level key '" + val + "'");
    return true;
  }

  bool parse_error(std::size_t position, const std::string&,
                   const nlohmann::json::exception& ex) override {
    throw ValidationError("syntax error at byte " + std::to_string(position) +
                          ": " + ex.what());
  }

  bool seen_frame() const { return seen_frame_; }
  bool seen_masses() const { return seen_masses_; }

 private:
  enum class Where { Root, FrameArray, MassesObject, MetadataObject };

  bool number(double v) {
    if (where_ == Where::MassesObject) {
      doc.masses.emplace_back(pending_key_, v);
      return true;
    }
    return fail("unexpected number value");
  }

  [[noreturn]] bool fail(const std::string& what) {
    throw ValidationError("invalid BPA document: " + what);
  }

  Where where_ = Where::Root;
  std::string pending_key_;
  int depth_ = 0;
  bool seen_frame_ = false;
  bool seen_masses_ = false;
};

inline std::string format_prob(double v, bool full_precision) {
  char buf[64];
  if (full_precision) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
  } else {
    std::snprintf(buf, sizeof(buf), "%.4f", v);
  }
  return buf;
}

// Rounds to 4 decimals so JSON output carries the same numbers as CSV.
inline double round4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return std::strtod(buf, nullptr);
}

inline std::string format_q(double q) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", q);
  return buf;
}

}  // namespace detail

inline BpaDocument parse_bpa_document(const std::string& text) {
  detail::BpaSax sax;
  nlohmann::json::sax_parse(text, &sax);
  if (!sax.seen_frame())
    throw ValidationError("invalid BPA document: missing \"frame\"");
  if (!sax.seen_masses())
    throw ValidationError("invalid BPA document: missing \"masses\"");
  return std::move(sax.doc);
}

// Parses and validates a BPA document into a MassFunction.
inline MassFunction parse_bpa(const std::string& text, bool strict = false,
                              double mass_tolerance = kDefaultMassTolerance) {
  const BpaDocument doc = parse_bpa_document(text);
  const Frame frame(doc.frame_labels);
  std::vector<std::pair<SubsetMask, double>> entries;
  entries.reserve(doc.masses.size());
  for (const auto& [key, mass] : doc.masses) {
    try {
      entries.emplace_back(frame.mask_of(detail::split_focal_key(key)), mass);
    } catch (const ValidationError& e) {
      throw ValidationError("focal set \"" + key + "\": " + e.what());
    }
  }
  try {
    return MassFunction(frame, entries, strict, mass_tolerance);
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("invalid BPA: ") + e.what());
  }
}

// Canonical comma-joined label string for a subset, in frame order.
inline std::string focal_key(const Frame& frame, SubsetMask a) {
  if (a.is_empty()) return "{}";
  std::string key;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if (!a.contains(i)) continue;
    if (!key.empty()) key += ',';
    key += frame.label(i);
  }
  return key;
}

// Emits a MassFunction as a BPA document; full binary precision, so
// parse(emit(m)) round-trips exactly.
inline std::string emit_bpa(const MassFunction& m,
                            const BpaMetadata& metadata = {}) {
  nlohmann::ordered_json doc;
  doc["frame"] = m.frame().labels();
  auto& masses = doc["masses"] = nlohmann::ordered_json::object();
  for (const auto& [a, mass] : m.focal_sets())
    masses[focal_key(m.frame(), a)] = mass;
  if (metadata.name || metadata.source) {
    auto& md = doc["metadata"] = nlohmann::ordered_json::object();
    if (metadata.name) md["name"] = *metadata.name;
    if (metadata.source) md["source"] = *metadata.source;
  }
  return doc.dump(2) + "\n";
}

enum class OutputFormat { Csv, Json };

inline std::string emit_distribution(const ProbabilityDistribution& p,
                                     OutputFormat format,
                                     bool full_precision = false) {
  if (format == OutputFormat::Csv) {
    std::string out = "element,probability,q\n";
    for (std::size_t i = 0; i < p.frame.size(); ++i) {
      out += p.frame.label(i);
      out += ',';
      out += detail::format_prob(p.probs[i], full_precision);
      out += ',';
      out += detail::format_q(p.q);
      out += '\n';
    }
    return out;
  }
  nlohmann::ordered_json doc;
  doc["frame"] = p.frame.labels();
  doc["q"] = p.q;
  auto& probs = doc["probabilities"] = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < p.frame.size(); ++i)
    probs[p.frame.label(i)] =
        full_precision ? p.probs[i] : detail::round4(p.probs[i]);
  return doc.dump(2) + "\n";
}

inline std::string emit_sweep(const SweepTable& t, OutputFormat format,
                              bool full_precision = false) {
  if (t.rows.empty()) throw ValidationError("sweep table is empty");
  const Frame& frame = t.rows.front().frame;
  if (format == OutputFormat::Csv) {
    std::string out = "q";
    for (const auto& label : frame.labels()) {
      out += ',';
      out += label;
    }
    out += '\n';
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      out += detail::format_q(t.qs[r]);
      for (double v : t.rows[r].probs) {
        out += ',';
        out += detail::format_prob(v, full_precision);
      }
      out += '\n';
    }
    return out;
  }
  nlohmann::ordered_json doc;
  doc["frame"] = frame.labels();
  doc["qs"] = t.qs;
  auto& rows = doc["rows"] = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    nlohmann::ordered_json row;
    row["q"] = t.qs[r];
    auto& probs = row["probabilities"] = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < frame.size(); ++i)
      probs[frame.label(i)] = full_precision
                                  ? t.rows[r].probs[i]
                                  : detail::round4(t.rows[r].probs[i]);
    rows.push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

}  // namespace mulp
