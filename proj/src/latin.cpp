#include "paratopia/latin.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace paratopia {

std::string LatinViolation::str() const {
    std::ostringstream out;
    switch (kind) {
        case Row: out << "symbol " << symbol << " repeated in row " << index; break;
        case Column: out << "symbol " << symbol << " repeated in column " << index; break;
        case Range: out << "symbol " << symbol << " out of range at row " << index; break;
    }
    return out.str();
}

latin_error::latin_error(const LatinViolation& v) : std::runtime_error(v.str()), violation(v) {}

std::optional<LatinViolation> LatinSquare::check(int n, const std::vector<int>& cells) {
    if (n < 1 || (int)cells.size() != n * n) return LatinViolation{LatinViolation::Range, 0, 0};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int s = cells[i * n + j];
            if (s < 1 || s > n) return LatinViolation{LatinViolation::Range, i + 1, s};
        }
    std::vector<char> seen(n + 1);
    for (int i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < n; ++j) {
            int s = cells[i * n + j];
            if (seen[s]) return LatinViolation{LatinViolation::Row, i + 1, s};
            seen[s] = 1;
        }
    }
    for (int j = 0; j < n; ++j) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int i = 0; i < n; ++i) {
            int s = cells[i * n + j];
            if (seen[s]) return LatinViolation{LatinViolation::Column, j + 1, s};
            seen[s] = 1;
        }
    }
    return std::nullopt;
}

LatinSquare LatinSquare::checked(int n, std::vector<int> cells) {
    if (auto v = check(n, cells)) throw latin_error(*v);
    return unchecked(n, std::move(cells));
}

LatinSquare LatinSquare::unchecked(int n, std::vector<int> cells) {
    LatinSquare L;
    L.n_ = n;
    L.cells_ = std::move(cells);
    return L;
}

std::vector<Triple> LatinSquare::triples() const {
    std::vector<Triple> out;
    out.reserve((size_t)n_ * n_);
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) out.push_back({i, j, at(i, j)});
    return out;
}

LatinSquare LatinSquare::read(std::istream& in) {
    int n;
    if (!(in >> n) || n < 1) throw std::invalid_argument("bad latin square file: order");
    std::vector<int> cells((size_t)n * n);
    for (auto& c : cells)
        if (!(in >> c)) throw std::invalid_argument("bad latin square file: truncated");
    return checked(n, std::move(cells));
}

void LatinSquare::write(std::ostream& out) const {
    out << n_ << '\n';
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j) {
            if (j > 1) out << ' ';
            out << at(i, j);
        }
        out << '\n';
    }
}

std::string LatinSquare::str() const {
    std::ostringstream out;
    write(out);
    return out.str();
}

PartialLatinSquare::PartialLatinSquare(int n) : n_(n), cells_((size_t)n * n, 0) {
    if (n < 1) throw std::invalid_argument("partial latin square order must be positive");
}

PartialLatinSquare::PartialLatinSquare(const LatinSquare& full)
    : n_(full.order()), filled_(full.order() * full.order()), cells_(full.cells()) {}

int PartialLatinSquare::at(int i, int j) const {
    int s = cells_[(i - 1) * n_ + (j - 1)];
    if (s == 0) throw std::out_of_range("cell is empty");
    return s;
}

void PartialLatinSquare::set(int i, int j, int sym) {
    if (i < 1 || i > n_ || j < 1 || j > n_ || sym < 1 || sym > n_)
        throw std::out_of_range("cell or symbol out of range");
    for (int k = 1; k <= n_; ++k) {
        if (k != j && cells_[(i - 1) * n_ + (k - 1)] == sym)
            throw latin_error({LatinViolation::Row, i, sym});
        if (k != i && cells_[(k - 1) * n_ + (j - 1)] == sym)
            throw latin_error({LatinViolation::Column, j, sym});
    }
    int& c = cells_[(i - 1) * n_ + (j - 1)];
    if (c == 0) ++filled_;
    c = sym;
}

void PartialLatinSquare::erase(int i, int j) {
    int& c = cells_[(i - 1) * n_ + (j - 1)];
    if (c != 0) --filled_;
    c = 0;
}

std::vector<Triple> PartialLatinSquare::triples() const {
    std::vector<Triple> out;
    out.reserve(filled_);
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            if (has(i, j)) out.push_back({i, j, at(i, j)});
    return out;
}

bool PartialLatinSquare::is_completion_of(const PartialLatinSquare& seed) const {
    if (seed.order() != n_) return false;
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            if (seed.has(i, j) && (!has(i, j) || at(i, j) != seed.at(i, j))) return false;
    return true;
}

std::optional<LatinSquare> PartialLatinSquare::to_latin() const {
    if (filled_ != n_ * n_) return std::nullopt;
    if (LatinSquare::check(n_, cells_)) return std::nullopt;
    return LatinSquare::unchecked(n_, cells_);
}

LatinSquare cyclic_square(int n) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    std::vector<int> cells((size_t)n * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) cells[(i - 1) * n + (j - 1)] = (i + j - 2) % n + 1;
    return LatinSquare::unchecked(n, std::move(cells));
}

LatinSquare totally_symmetric_square(int n) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    std::vector<int> cells((size_t)n * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int k = ((-(i + j)) % n + n) % n;  // row+col+sym == 0 mod n
            if (k == 0) k = n;
            cells[(i - 1) * n + (j - 1)] = k;
        }
    return LatinSquare::unchecked(n, std::move(cells));
}

LatinSquare direct_product(const LatinSquare& A, const LatinSquare& B) {
    const int na = A.order(), nb = B.order(), n = na * nb;
    std::vector<int> cells((size_t)n * n);
    for (int a1 = 1; a1 <= na; ++a1)
        for (int b1 = 1; b1 <= nb; ++b1)
            for (int a2 = 1; a2 <= na; ++a2)
                for (int b2 = 1; b2 <= nb; ++b2) {
                    int i = (a1 - 1) * nb + b1;
                    int j = (a2 - 1) * nb + b2;
                    int s = (A.at(a1, a2) - 1) * nb + B.at(b1, b2);
                    cells[(i - 1) * n + (j - 1)] = s;
                }
    return LatinSquare::unchecked(n, std::move(cells));
}

std::string SubsquareError::str() const {
    std::ostringstream out;
    out << "not a subsquare: " << symbol_count << " symbols in the submatrix";
    return out.str();
}

std::variant<PartialLatinSquare, SubsquareError> subsquare_on(const LatinSquare& L,
                                                              const std::vector<int>& rows,
                                                              const std::vector<int>& cols) {
    if (rows.size() != cols.size()) throw std::invalid_argument("row and column sets must have equal size");
    std::set<int> syms;
    for (int i : rows)
        for (int j : cols) syms.insert(L.at(i, j));
    if (syms.size() != rows.size()) return SubsquareError{(int)syms.size()};
    // Latin on the submatrix: every symbol once per row and per column.
    for (int i : rows) {
        std::set<int> seen;
        for (int j : cols) seen.insert(L.at(i, j));
        if (seen != syms) return SubsquareError{(int)syms.size()};
    }
    for (int j : cols) {
        std::set<int> seen;
        for (int i : rows) seen.insert(L.at(i, j));
        if (seen != syms) return SubsquareError{(int)syms.size()};
    }
    PartialLatinSquare out(L.order());
    for (int i : rows)
        for (int j : cols) out.set(i, j, L.at(i, j));
    return out;
}

}  // namespace paratopia
