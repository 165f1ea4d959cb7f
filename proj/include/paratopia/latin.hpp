#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace paratopia {

struct Triple {
    int row = 0, col = 0, sym = 0;
    bool operator==(const Triple&) const = default;
    auto operator<=>(const Triple&) const = default;
};

struct LatinViolation {
    enum Kind { Row, Column, Range } kind = Range;
    int index = 0;  // offending row or column
    int symbol = 0;
    std::string str() const;
};

struct latin_error : std::runtime_error {
    LatinViolation violation;
    explicit latin_error(const LatinViolation& v);
};

class LatinSquare {
public:
    LatinSquare() = default;
    // Validates the Latin property; throws latin_error with the first
    // violation in row-major scan order.
    static LatinSquare checked(int n, std::vector<int> cells);
    static std::optional<LatinViolation> check(int n, const std::vector<int>& cells);
    static LatinSquare unchecked(int n, std::vector<int> cells);

    int order() const { return n_; }
    int at(int i, int j) const { return cells_[(i - 1) * n_ + (j - 1)]; }  // 1-based
    const std::vector<int>& cells() const { return cells_; }
    std::vector<Triple> triples() const;

    // File format: first line n, then n lines of n space-separated symbols.
    static LatinSquare read(std::istream& in);
    void write(std::ostream& out) const;
    std::string str() const;

    bool operator==(const LatinSquare&) const = default;

private:
    int n_ = 0;
    std::vector<int> cells_;
};

// Filled cells only; absence is emptiness, there is no sentinel symbol.
class PartialLatinSquare {
public:
    PartialLatinSquare() = default;
    explicit PartialLatinSquare(int n);
    explicit PartialLatinSquare(const LatinSquare& full);

    int order() const { return n_; }
    bool has(int i, int j) const { return cells_[(i - 1) * n_ + (j - 1)] != 0; }
    int at(int i, int j) const;  // throws if empty
    // Enforces the partial Latin property (no repeat in a row or column).
    void set(int i, int j, int sym);
    void erase(int i, int j);
    int filled_count() const { return filled_; }
    std::vector<Triple> triples() const;
    bool is_completion_of(const PartialLatinSquare& seed) const;

    std::optional<LatinSquare> to_latin() const;  // nullopt unless complete

    bool operator==(const PartialLatinSquare&) const = default;

private:
    int n_ = 0;
    int filled_ = 0;
    std::vector<int> cells_;  // 0 = empty, internal only
};

// C_n(i,j) = ((i+j-2) mod n) + 1; the cyclic-group table.
LatinSquare cyclic_square(int n);

// Triple set invariant under all six coordinate permutations:
// row+col+sym == 0 (mod n) under 1-based labels.
LatinSquare totally_symmetric_square(int n);

// Pairs flattened as (a-1)*|B| + b.
LatinSquare direct_product(const LatinSquare& A, const LatinSquare& B);

struct SubsquareError {
    int symbol_count = 0;
    std::string str() const;
};

// The submatrix on rows x cols if it is a subsquare (|symbols| == |rows| and
// Latin); the result keeps original coordinates.
std::variant<PartialLatinSquare, SubsquareError> subsquare_on(const LatinSquare& L,
                                                              const std::vector<int>& rows,
                                                              const std::vector<int>& cols);

}  // namespace paratopia
