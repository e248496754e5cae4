#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "evidist/bpa.hpp"
#include "evidist/error.hpp"

namespace evidist {

struct NamedBpa {
  std::string name;
  Bpa bpa;

  friend bool operator==(const NamedBpa&, const NamedBpa&) = default;
};

/// A frame declaration plus named BPAs over it, in file order.
///
///   # comment
///   frame: a@1 b@2.5 c@4
///   bpa m1:
///     0.6 : {a}
///     2/5 : {a, b}
struct BpaDocument {
  Frame frame;
  std::vector<NamedBpa> bpas;

  /// Throws UnknownBpa.
  const Bpa& find(std::string_view name) const;

  friend bool operator==(const BpaDocument&, const BpaDocument&) = default;
};

/// Parse failure carrying the 1-based line it refers to.
class DocumentError : public Error {
 public:
  DocumentError(ErrorCode code, std::size_t line, const std::string& detail);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Throws DocumentError (SyntaxError, UnknownElement, or any Bpa/Frame
/// validation code annotated with its line).
BpaDocument parse_bpa_file(std::string_view text);

/// Reads and parses a file. Throws IoError or DocumentError.
BpaDocument load_bpa_file(const std::filesystem::path& path);

/// Serializes in the grammar accepted by parse_bpa_file. Numbers use the
/// shortest round-trip representation, so parsing the output reproduces the
/// document exactly. Throws SyntaxError for labels or names the grammar
/// cannot express.
std::string emit_bpa_document(const BpaDocument& doc);

/// True if `label` can appear in a document.
bool is_valid_label(std::string_view label) noexcept;

}  // namespace evidist
