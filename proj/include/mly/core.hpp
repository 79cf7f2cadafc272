#pragma once

// Shared vocabulary: element indices, words, rectangular tables, verdicts and
// the two exception types used across the workbench.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace mly {

using Elem = std::size_t;
using Word = std::vector<Elem>;
using json = nlohmann::json;

/// Structural problem with an input: bad index, mismatched boundary, missing
/// field. `path()` is a JSON-pointer-like location of the offending datum.
class InputError : public std::invalid_argument {
 public:
  InputError(std::string path, const std::string& message)
      : std::invalid_argument(path.empty() ? message : path + ": " + message),
        path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// First failing instance of a law: which law, at which arguments, and the
/// two evaluated sides of the equation.
struct Witness {
  std::string law;
  json at = json::object();
  json lhs;
  json rhs;
};

struct Verdict {
  bool pass = true;
  std::optional<Witness> witness;

  static Verdict ok() { return {}; }
  static Verdict fail(Witness w) { return {false, std::move(w)}; }
  static Verdict fail(std::string law, json at, json lhs, json rhs) {
    return fail(Witness{std::move(law), std::move(at), std::move(lhs), std::move(rhs)});
  }

  explicit operator bool() const noexcept { return pass; }
  const std::string& law() const;
};

/// Thrown by constructions whose input violates a law they depend on.
class LawViolation : public std::runtime_error {
 public:
  explicit LawViolation(Witness w);
  const Witness& witness() const noexcept { return witness_; }

 private:
  Witness witness_;
};

/// Dense rows x cols table of element indices, row-major. Row = first
/// argument (letter or left factor), column = second argument.
class Table {
 public:
  Table() = default;
  Table(std::size_t rows, std::size_t cols, Elem fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Table(std::size_t rows, std::size_t cols, std::vector<Elem> data);

  static Table from_rows(const std::vector<std::vector<Elem>>& rows, std::size_t cols);
  template <class F>
  static Table tabulate(std::size_t rows, std::size_t cols, F&& f) {
    Table t(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) t.data_[r * cols + c] = f(r, c);
    return t;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<Elem>& data() const noexcept { return data_; }

  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::vector<std::vector<Elem>> to_rows() const;

  /// Throws InputError naming `path/r/c` for the first entry >= bound.
  void require_below(std::size_t bound, std::string_view path) const;

  friend bool operator==(const Table&, const Table&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

/// Visits every vector of length `slots` with entries < `base`, in
/// lexicographic order (slot 0 most significant). Stops early when `visit`
/// returns false. Returns false iff stopped early.
template <class F>
bool for_each_assignment(std::size_t slots, std::size_t base, F&& visit) {
  std::vector<Elem> v(slots, 0);
  if (slots > 0 && base == 0) return true;
  while (true) {
    if (!visit(static_cast<const std::vector<Elem>&>(v))) return false;
    std::size_t i = slots;
    while (i > 0) {
      --i;
      if (++v[i] < base) break;
      v[i] = 0;
      if (i == 0) return true;
    }
    if (slots == 0) return true;
  }
}

/// All words over an alphabet of the given size with length <= max_len, in
/// shortlex order.
std::vector<Word> words_up_to(std::size_t alphabet, std::size_t max_len);

Word concat(const Word& u, const Word& v);

/// Saturating a^b used by search budgets.
std::size_t checked_pow(std::size_t base, std::size_t exp);

}  // namespace mly
