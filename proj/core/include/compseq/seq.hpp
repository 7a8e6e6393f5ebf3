#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "compseq/errors.hpp"
#include "compseq/gauss.hpp"

namespace compseq {

/// Element alphabets. Binary = {1,-1}, Ternary = {1,0,-1},
/// Quad = {1,-1,i,-i}, Gauss = unrestricted Gaussian integers.
enum class Alphabet { Binary, Ternary, Quad, Gauss };

const char* to_string(Alphabet a);
Alphabet alphabet_from_string(std::string_view name);
bool element_in_alphabet(const GaussInt& z, Alphabet a);

/// Smallest alphabet containing both operands (Binary < Ternary < Gauss,
/// Binary < Quad < Gauss; Ternary and Quad join to Gauss).
Alphabet join(Alphabet a, Alphabet b);

/// Smallest alphabet containing every element.
Alphabet infer_alphabet(std::span<const GaussInt> elems);

/// The elements of a finite alphabet in enumeration order.
/// Throws DomainError for the unrestricted Gaussian alphabet.
std::vector<GaussInt> alphabet_elements(Alphabet a);

/// Immutable finite sequence with a tagged alphabet. Length is always >= 1.
class Seq {
public:
    /// Throws DomainError when elems is empty or an element violates the tag.
    Seq(std::vector<GaussInt> elems, Alphabet alphabet);

    /// Convenience constructor inferring the smallest alphabet.
    explicit Seq(std::vector<GaussInt> elems);

    /// Parses one whitespace-separated token line, e.g. "+ -j 0 1+2i".
    /// Alphabet is inferred. Throws DomainError on malformed tokens.
    static Seq parse(std::string_view text);

    int size() const { return static_cast<int>(elems_.size()); }
    const GaussInt& operator[](int i) const { return elems_[static_cast<size_t>(i)]; }
    Alphabet alphabet() const { return alphabet_; }
    std::span<const GaussInt> elems() const { return elems_; }

    /// Sum of squared element magnitudes; equals the lag-0 autocorrelation.
    std::uint64_t energy() const;

    int zero_count() const;
    bool is_real() const;

    /// Same sequence under a wider (or equal) alphabet tag.
    Seq retagged(Alphabet a) const;

    /// Canonical token line.
    std::string str() const;

    /// Element-wise comparison; the alphabet tag does not participate.
    friend bool operator==(const Seq& a, const Seq& b) { return a.elems_ == b.elems_; }
    friend std::strong_ordering operator<=>(const Seq& a, const Seq& b);

private:
    std::vector<GaussInt> elems_;
    Alphabet alphabet_;
};

// Elementary sequence operations.
Seq reverse(const Seq& a);
Seq negate(const Seq& a);
Seq conjugate(const Seq& a);
Seq concat(const Seq& a, const Seq& b);
Seq interleave(const Seq& a, const Seq& b);  // equal lengths

/// Plain inner product sum a_i * b_i, no conjugation. The companion-pair
/// machinery relies on this convention; use hermitian_product for
/// orthogonality checks.
GaussInt inner_product(const Seq& a, const Seq& b);
GaussInt hermitian_product(const Seq& a, const Seq& b);

/// (a1, -a0, a3, -a2, ...): swap-negate within adjacent element pairs.
/// Even length required.
Seq f_i(const Seq& a);

/// (a_{n/2}, ..., a_{n-1}, -a_0, ..., -a_{n/2-1}): rotate halves, negating
/// the wrapped half. Even length required.
Seq f_c(const Seq& a);

Seq f_i_conj(const Seq& a);  // conjugate of f_i(a)
Seq f_c_conj(const Seq& a);  // conjugate of f_c(a)

// Sequence text I/O: one sequence per line, '#' starts a comment.
std::vector<Seq> read_sequences(std::istream& in);
std::vector<Seq> read_sequence_file(const std::string& path);

}  // namespace compseq
