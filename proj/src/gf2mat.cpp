#include "cycsig/gf2mat.hpp"

#include "cycsig/error.hpp"

#include <bit>
#include <istream>
#include <ostream>

namespace cycsig {

BitVector::BitVector(std::size_t length)
    : length_(length), words_((length + kWordBits - 1) / kWordBits, 0) {}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i);
        } else if (bits[i] != '0') {
            throw Error(Errc::ParseError, "invalid bit character '" + std::string(1, bits[i]) + "'");
        }
    }
    return v;
}

void BitVector::set(std::size_t i, bool value) noexcept {
    const Word mask = Word{1} << (i % kWordBits);
    if (value) {
        words_[i / kWordBits] |= mask;
    } else {
        words_[i / kWordBits] &= ~mask;
    }
}

bool BitVector::is_zero() const noexcept {
    for (Word w : words_) {
        if (w != 0) return false;
    }
    return true;
}

std::size_t BitVector::popcount() const noexcept {
    std::size_t n = 0;
    for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::size_t BitVector::first_set() const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) {
        if (words_[k] != 0) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
    }
    return length_;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.length_ != length_) {
        throw Error(Errc::LengthMismatch, "xor of vectors of length " + std::to_string(length_) +
                                              " and " + std::to_string(other.length_));
    }
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
    return *this;
}

std::string BitVector::to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

void BitMatrix::push_row(BitVector row, std::string label) {
    if (rows_.empty() && columns_ == 0) columns_ = row.size();
    if (row.size() != columns_) {
        throw Error(Errc::LengthMismatch, "row of length " + std::to_string(row.size()) +
                                              " in matrix with " + std::to_string(columns_) + " columns");
    }
    rows_.push_back(std::move(row));
    labels_.push_back(std::move(label));
}

void BitMatrix::write_text(std::ostream& os) const {
    bool any_label = false;
    for (const auto& l : labels_) any_label = any_label || !l.empty();
    if (any_label) {
        os << "# labels: ";
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (i) os << ',';
            os << labels_[i];
        }
        os << '\n';
    }
    for (const auto& r : rows_) os << r.to_string() << '\n';
}

BitMatrix BitMatrix::read_text(std::istream& is) {
    constexpr std::string_view kHeader = "# labels:";
    BitMatrix m;
    std::vector<std::string> labels;
    bool have_labels = false;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (lineno == 1 && line.starts_with(kHeader)) {
            have_labels = true;
            std::string rest = line.substr(kHeader.size());
            std::size_t start = 0;
            while (start <= rest.size()) {
                std::size_t comma = rest.find(',', start);
                if (comma == std::string::npos) comma = rest.size();
                std::string item = rest.substr(start, comma - start);
                const auto b = item.find_first_not_of(' ');
                const auto e = item.find_last_not_of(' ');
                labels.push_back(b == std::string::npos ? std::string{} : item.substr(b, e - b + 1));
                start = comma + 1;
            }
            continue;
        }
        if (line.empty()) continue;
        try {
            m.push_row(BitVector::from_string(line));
        } catch (const Error& e) {
            throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": " + e.what(), lineno);
        }
    }
    if (have_labels) {
        if (labels.size() != m.rows()) {
            throw Error(Errc::ParseError, "label count " + std::to_string(labels.size()) +
                                              " does not match row count " + std::to_string(m.rows()));
        }
        m.labels_ = std::move(labels);
    }
    return m;
}

bool EchelonBasis::insert(BitVector v) {
    v = reduce(std::move(v));
    const std::size_t lead = v.first_set();
    if (lead == v.size()) return false;
    pivot_row_[lead] = basis_.size();
    basis_.push_back(std::move(v));
    return true;
}

BitVector EchelonBasis::reduce(BitVector v) const {
    if (v.size() != columns_) {
        throw Error(Errc::LengthMismatch, "vector of length " + std::to_string(v.size()) +
                                              " against " + std::to_string(columns_) + " columns");
    }
    // Each basis vector has no bits below its pivot, so clearing pivots in
    // increasing column order never disturbs a column already visited.
    BitVector::Word* words = v.data();
    const std::size_t nwords = v.words().size();
    for (std::size_t k = 0; k < nwords; ++k) {
        BitVector::Word pending = words[k];
        while (pending != 0) {
            const unsigned bit = static_cast<unsigned>(std::countr_zero(pending));
            const std::size_t r = pivot_row_[k * BitVector::kWordBits + bit];
            if (r != kNone) {
                const auto& bw = basis_[r].words();
                for (std::size_t j = k; j < nwords; ++j) words[j] ^= bw[j];
            }
            const BitVector::Word above = ~((BitVector::Word{2} << bit) - 1);
            pending = words[k] & (bit + 1 < BitVector::kWordBits ? above : 0);
        }
    }
    return v;
}

std::size_t rank(const BitMatrix& m) {
    EchelonBasis basis(m.columns());
    for (const auto& r : m.row_vectors()) basis.insert(r);
    return basis.rank();
}

bool in_row_space(const BitMatrix& m, const BitVector& v) {
    if (v.size() != m.columns()) {
        throw Error(Errc::LengthMismatch, "vector of length " + std::to_string(v.size()) +
                                              " against matrix with " + std::to_string(m.columns()) + " columns");
    }
    EchelonBasis basis(m.columns());
    for (const auto& r : m.row_vectors()) basis.insert(r);
    return basis.reduce(v).is_zero();
}

BitMatrix append_rows(const BitMatrix& m, const std::vector<LabeledRow>& extra) {
    BitMatrix out = m;
    for (const auto& r : extra) out.push_row(r.bits, r.label);
    return out;
}

} // namespace cycsig
