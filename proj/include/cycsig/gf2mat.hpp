#pragma once

// Dense bit-packed linear algebra over GF(2).

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace cycsig {

class BitVector {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitVector() = default;
    explicit BitVector(std::size_t length);
    /// From a '0'/'1' string; throws ParseError on any other character.
    static BitVector from_string(std::string_view bits);

    std::size_t size() const noexcept { return length_; }
    bool get(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i, bool value = true) noexcept;
    void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

    bool is_zero() const noexcept;
    std::size_t popcount() const noexcept;
    /// Index of the lowest set bit, or size() if none.
    std::size_t first_set() const noexcept;

    /// Throws LengthMismatch.
    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend bool operator==(const BitVector&, const BitVector&) = default;

    const std::vector<Word>& words() const noexcept { return words_; }
    Word* data() noexcept { return words_.data(); }
    std::string to_string() const;

private:
    std::size_t length_ = 0;
    std::vector<Word> words_;
};

class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t columns) : columns_(columns) {}

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t columns() const noexcept { return columns_; }

    const BitVector& row(std::size_t i) const { return rows_.at(i); }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const std::vector<BitVector>& row_vectors() const noexcept { return rows_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    /// Throws LengthMismatch.
    void push_row(BitVector row, std::string label = {});

    /// Serialises as one '0'/'1' line per row, preceded by "# labels: ..."
    /// when any row carries a label.
    void write_text(std::ostream& os) const;
    /// Inverse of write_text; the header line is optional.
    static BitMatrix read_text(std::istream& is);

private:
    std::size_t columns_ = 0;
    std::vector<BitVector> rows_;
    std::vector<std::string> labels_;
};

struct LabeledRow {
    BitVector bits;
    std::string label;
};

std::size_t rank(const BitMatrix& m);

/// True iff v is a GF(2) combination of the rows of m. Throws LengthMismatch.
bool in_row_space(const BitMatrix& m, const BitVector& v);

/// Copy of m with `extra` appended. Throws LengthMismatch.
BitMatrix append_rows(const BitMatrix& m, const std::vector<LabeledRow>& extra);

/// Incremental row-echelon basis: insert() reduces a vector against the
/// current pivots and keeps it if independent.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t columns) : columns_(columns), pivot_row_(columns, kNone) {}

    /// Returns true if v was independent of the basis (and is now part of it).
    bool insert(BitVector v);
    /// Reduces v to its normal form modulo the span.
    BitVector reduce(BitVector v) const;
    std::size_t rank() const noexcept { return basis_.size(); }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::size_t columns_;
    std::vector<BitVector> basis_;
    std::vector<std::size_t> pivot_row_;
};

} // namespace cycsig
