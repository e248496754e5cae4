#include "evidist/document.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include <fmt/format.h>

namespace evidist {

DocumentError::DocumentError(ErrorCode code, std::size_t line, const std::string& detail)
    : Error(code, fmt::format("line {}: {}", line, detail)), line_(line) {}

const Bpa& BpaDocument::find(std::string_view name) const {
  for (const auto& named : bpas) {
    if (named.name == name) return named.bpa;
  }
  throw Error(ErrorCode::UnknownBpa, fmt::format("no BPA named '{}'", name));
}

bool is_valid_label(std::string_view label) noexcept {
  if (label.empty()) return false;
  return std::none_of(label.begin(), label.end(), [](char c) {
    return c == '@' || c == '{' || c == '}' || c == ',' || c == ':' || c == '#' || c == ' ' ||
           c == '\t' || c == '\r' || c == '\n';
  });
}

namespace {

constexpr std::string_view kSpace = " \t\r";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_whitespace(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    pos = s.find_first_not_of(kSpace, pos);
    if (pos == std::string_view::npos) break;
    auto end = s.find_first_of(kSpace, pos);
    if (end == std::string_view::npos) end = s.size();
    out.push_back(s.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

std::optional<double> parse_real(std::string_view text) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || text.empty()) return std::nullopt;
  return value;
}

/// Decimal literal or fraction a/b.
std::optional<double> parse_mass(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_real(text);
  const auto num = parse_real(trim(text.substr(0, slash)));
  const auto den = parse_real(trim(text.substr(slash + 1)));
  if (!num || !den || *den == 0.0) return std::nullopt;
  return *num / *den;
}

struct PendingBpa {
  std::string name;
  std::size_t line;
  std::vector<MassAssignment> entries;
};

class Parser {
 public:
  BpaDocument run(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      ++line_no;
      auto line = text.substr(pos, end - pos);
      pos = end + 1;
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      line = trim(line);
      if (!line.empty()) handle(line, line_no);
      if (end == text.size()) break;
    }
    finish_bpa();
    if (!frame_) throw DocumentError(ErrorCode::SyntaxError, line_no, "missing 'frame:' declaration");
    return BpaDocument{*frame_, std::move(bpas_)};
  }

 private:
  void handle(std::string_view line, std::size_t line_no) {
    if (line.starts_with("frame:")) {
      parse_frame(line.substr(6), line_no);
    } else if (line.starts_with("bpa ") || line.starts_with("bpa\t")) {
      parse_header(line.substr(4), line_no);
    } else {
      parse_entry(line, line_no);
    }
  }

  void parse_frame(std::string_view rest, std::size_t line_no) {
    if (frame_) throw DocumentError(ErrorCode::SyntaxError, line_no, "frame declared twice");
    std::vector<ElementLabel> labels;
    std::vector<double> positions;
    std::size_t with_position = 0;
    for (auto token : split_whitespace(rest)) {
      const auto at = token.find('@');
      const auto label = token.substr(0, at);
      if (!is_valid_label(label)) {
        throw DocumentError(ErrorCode::SyntaxError, line_no, fmt::format("invalid element label '{}'", label));
      }
      labels.emplace_back(label);
      if (at != std::string_view::npos) {
        auto p = parse_real(token.substr(at + 1));
        if (!p) {
          throw DocumentError(ErrorCode::SyntaxError, line_no,
                              fmt::format("invalid position in '{}'", token));
        }
        positions.push_back(*p);
        ++with_position;
      }
    }
    if (with_position != 0 && with_position != labels.size()) {
      throw DocumentError(ErrorCode::SyntaxError, line_no,
                          "positions must be given for all elements or none");
    }
    try {
      frame_ = with_position == 0 ? Frame::create(std::move(labels))
                                  : Frame::create(std::move(labels), std::move(positions));
    } catch (const Error& e) {
      throw DocumentError(e.code(), line_no, e.what());
    }
  }

  void parse_header(std::string_view rest, std::size_t line_no) {
    if (!frame_) {
      throw DocumentError(ErrorCode::SyntaxError, line_no, "'frame:' must precede any bpa");
    }
    rest = trim(rest);
    if (!rest.ends_with(':')) {
      throw DocumentError(ErrorCode::SyntaxError, line_no, "expected 'bpa <name>:'");
    }
    const auto name = trim(rest.substr(0, rest.size() - 1));
    if (!is_valid_label(name)) {
      throw DocumentError(ErrorCode::SyntaxError, line_no, fmt::format("invalid BPA name '{}'", name));
    }
    finish_bpa();
    const bool taken = std::any_of(bpas_.begin(), bpas_.end(),
                                   [&](const NamedBpa& b) { return b.name == name; });
    if (taken) {
      throw DocumentError(ErrorCode::SyntaxError, line_no, fmt::format("BPA '{}' declared twice", name));
    }
    pending_ = PendingBpa{std::string(name), line_no, {}};
  }

  void parse_entry(std::string_view line, std::size_t line_no) {
    if (!pending_) {
      throw DocumentError(ErrorCode::SyntaxError, line_no, "mass line outside a 'bpa <name>:' block");
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw DocumentError(ErrorCode::SyntaxError, line_no, "expected '<mass> : { <labels> }'");
    }
    const auto mass_text = trim(line.substr(0, colon));
    const auto mass = parse_mass(mass_text);
    if (!mass) {
      throw DocumentError(ErrorCode::SyntaxError, line_no, fmt::format("invalid mass '{}'", mass_text));
    }
    auto set_text = trim(line.substr(colon + 1));
    if (set_text.size() < 2 || set_text.front() != '{' || set_text.back() != '}') {
      throw DocumentError(ErrorCode::SyntaxError, line_no, "focal set must be written as { a, b, ... }");
    }
    set_text = trim(set_text.substr(1, set_text.size() - 2));

    std::uint64_t bits = 0;
    if (!set_text.empty()) {
      std::size_t pos = 0;
      while (true) {
        auto comma = set_text.find(',', pos);
        const auto label = trim(set_text.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
        if (!is_valid_label(label)) {
          throw DocumentError(ErrorCode::SyntaxError, line_no, fmt::format("invalid element label '{}'", label));
        }
        const auto index = frame_->index_of(label);
        if (!index) {
          throw DocumentError(ErrorCode::UnknownElement, line_no,
                              fmt::format("element '{}' is not declared in the frame", label));
        }
        const auto bit = std::uint64_t{1} << *index;
        if (bits & bit) {
          throw DocumentError(ErrorCode::SyntaxError, line_no, fmt::format("element '{}' listed twice", label));
        }
        bits |= bit;
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
      }
    }

    auto set = frame_->from_bits(bits);
    if (std::isnan(*mass) || *mass < 0.0 || *mass > 1.0) {
      throw DocumentError(ErrorCode::MassOutOfRange, line_no,
                          fmt::format("mass {} of {} is outside [0, 1]", *mass, to_string(set)));
    }
    if (set.empty() && *mass > 0.0) {
      throw DocumentError(ErrorCode::EmptySetMass, line_no, "the empty set cannot carry mass");
    }
    for (const auto& existing : pending_->entries) {
      if (existing.set.bits() == bits) {
        throw DocumentError(ErrorCode::DuplicateFocalSet, line_no,
                            fmt::format("focal set {} is assigned more than once", to_string(set)));
      }
    }
    pending_->entries.push_back({std::move(set), *mass});
  }

  void finish_bpa() {
    if (!pending_) return;
    try {
      bpas_.push_back({pending_->name, Bpa::create(*frame_, std::move(pending_->entries))});
    } catch (const Error& e) {
      throw DocumentError(e.code(), pending_->line, fmt::format("bpa '{}': {}", pending_->name, e.what()));
    }
    pending_.reset();
  }

  std::optional<Frame> frame_;
  std::vector<NamedBpa> bpas_;
  std::optional<PendingBpa> pending_;
};

}  // namespace

BpaDocument parse_bpa_file(std::string_view text) { return Parser{}.run(text); }

BpaDocument load_bpa_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, fmt::format("cannot open '{}'", path.string()));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::IoError, fmt::format("cannot read '{}'", path.string()));
  return parse_bpa_file(buffer.str());
}

namespace {

std::string shortest(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

}  // namespace

std::string emit_bpa_document(const BpaDocument& doc) {
  const auto& frame = doc.frame;
  std::string out = "frame:";
  for (std::size_t i = 0; i < frame.size(); ++i) {
    const auto& label = frame.label(i);
    if (!is_valid_label(label)) {
      throw Error(ErrorCode::SyntaxError, fmt::format("element label '{}' cannot be written", label));
    }
    out += ' ';
    out += label;
    if (frame.has_positions()) {
      out += '@';
      out += shortest(frame.positions()[i]);
    }
  }
  out += '\n';

  for (const auto& [name, bpa] : doc.bpas) {
    if (!is_valid_label(name)) {
      throw Error(ErrorCode::SyntaxError, fmt::format("BPA name '{}' cannot be written", name));
    }
    if (!(bpa.frame() == frame)) {
      throw Error(ErrorCode::FrameMismatch, fmt::format("bpa '{}' is not over the document frame", name));
    }
    out += fmt::format("bpa {}:\n", name);
    for (const auto& [set, mass] : bpa.focal()) {
      out += fmt::format("  {} : {{", shortest(mass));
      bool first = true;
      for (auto i : set.indices()) {
        out += first ? "" : ", ";
        out += frame.label(i);
        first = false;
      }
      out += "}\n";
    }
  }
  return out;
}

}  // namespace evidist
