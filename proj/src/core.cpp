#include "mly/core.hpp"

#include <limits>

namespace mly {

const std::string& Verdict::law() const {
  static const std::string none;
  return witness ? witness->law : none;
}

LawViolation::LawViolation(Witness w)
    : std::runtime_error("law violated: " + w.law), witness_(std::move(w)) {}

Table::Table(std::size_t rows, std::size_t cols, std::vector<Elem> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols)
    throw InputError("", "table has " + std::to_string(data_.size()) + " entries, expected " +
                             std::to_string(rows * cols));
}

Table Table::from_rows(const std::vector<std::vector<Elem>>& rows, std::size_t cols) {
  Table t(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw InputError("/" + std::to_string(r), "row has " + std::to_string(rows[r].size()) +
                                                    " entries, expected " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) t(r, c) = rows[r][c];
  }
  return t;
}

std::vector<std::vector<Elem>> Table::to_rows() const {
  std::vector<std::vector<Elem>> out(rows_, std::vector<Elem>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
  return out;
}

void Table::require_below(std::size_t bound, std::string_view path) const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) >= bound)
        throw InputError(std::string(path) + "/" + std::to_string(r) + "/" + std::to_string(c),
                         "entry " + std::to_string((*this)(r, c)) + " out of range (< " +
                             std::to_string(bound) + " required)");
}

std::vector<Word> words_up_to(std::size_t alphabet, std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= max_len; ++len) {
    for_each_assignment(len, alphabet, [&](const std::vector<Elem>& w) {
      out.push_back(w);
      return true;
    });
    if (alphabet == 0) break;
  }
  return out;
}

Word concat(const Word& u, const Word& v) {
  Word out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::size_t checked_pow(std::size_t base, std::size_t exp) {
  constexpr auto cap = std::numeric_limits<std::size_t>::max();
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return cap;
    r *= base;
  }
  return r;
}

}  // namespace mly
