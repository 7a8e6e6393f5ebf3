#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "compseq/seq.hpp"

namespace compseq {

/// Row-major grid of equal-length sequences.
class SeqMatrix {
public:
    /// Throws DomainError when rows is empty or row lengths differ.
    explicit SeqMatrix(std::vector<Seq> rows);

    int rows() const { return static_cast<int>(rows_.size()); }
    int cols() const { return rows_.front().size(); }
    const Seq& row(int i) const { return rows_[static_cast<size_t>(i)]; }
    Seq column(int j) const;
    std::span<const Seq> row_span() const { return rows_; }
    Alphabet alphabet() const;

    /// Columns [lo, hi) as a new matrix.
    SeqMatrix column_slice(int lo, int hi) const;

    SeqMatrix negated() const;
    SeqMatrix conjugated() const;

    /// Row-wise concatenation / interleaving with an equal-shape matrix.
    static SeqMatrix concat(const SeqMatrix& a, const SeqMatrix& b);
    static SeqMatrix interleave(const SeqMatrix& a, const SeqMatrix& b);

    std::string str() const;

    friend bool operator==(const SeqMatrix& a, const SeqMatrix& b) { return a.rows_ == b.rows_; }

private:
    std::vector<Seq> rows_;
};

/// k complementary sets of equal shape laid side by side in one wide matrix.
struct MoMatrix {
    SeqMatrix matrix;
    int sets = 1;

    int set_cols() const { return matrix.cols() / sets; }
    SeqMatrix set(int i) const;
    std::vector<SeqMatrix> split() const;
};

// Matrix text I/O: rows are sequence token lines, a blank line separates
// matrices, '#' starts a comment.
std::vector<SeqMatrix> read_matrices(std::istream& in);
std::vector<SeqMatrix> read_matrix_file(const std::string& path);
void write_matrices(std::ostream& out, std::span<const SeqMatrix> mats);

}  // namespace compseq
