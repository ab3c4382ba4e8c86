#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "abstain/hypothesis.hpp"

namespace abstain {

// Malformed input; what() carries "line L, column C: ..." when a position is known.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& msg);
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_ = 0, column_ = 0;
};

// Header `x,p1,...,pD`, then `name,v1,...,vD`.
HypothesisClass read_class_csv(std::istream& in, bool dedup = true);
// {"domain":[...],"hypotheses":{"name":[...]}}
HypothesisClass read_class_json(std::istream& in, bool dedup = true);
// Dispatches on the extension (.json, otherwise CSV).
HypothesisClass load_class(const std::string& path, bool dedup = true);

void write_class_csv(std::ostream& out, const HypothesisClass& h);

// Splits one CSV line; no quoting is supported.
std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace abstain
