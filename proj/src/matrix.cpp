#include "weeklab/matrix.hpp"

#include "weeklab/errors.hpp"

namespace weeklab {

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
    Matrix m;
    if (rows.empty()) return m;
    m.rows_ = rows.size();
    m.cols_ = rows.front().size();
    m.data_.reserve(m.rows_ * m.cols_);
    for (const auto& r : rows) {
        if (r.size() != m.cols_)
            throw ValidationError("ragged rows in matrix construction");
        m.data_.insert(m.data_.end(), r.begin(), r.end());
    }
    return m;
}

void Matrix::append_row(std::span<const double> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_)
        throw ValidationError("appended row width does not match matrix");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

} // namespace weeklab
