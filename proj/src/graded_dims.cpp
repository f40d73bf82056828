#include "loophom/graded_dims.hpp"

#include <algorithm>
#include <sstream>

namespace loophom {

GradedDims GradedDims::truncated(int cap) const
{
    if (cap > this->cap())
        throw std::out_of_range("cannot extend a truncated series");
    return GradedDims(std::vector<std::uint64_t>(dims_.begin(), dims_.begin() + cap + 1));
}

GradedDims GradedDims::operator*(const GradedDims& other) const
{
    const int c = std::min(cap(), other.cap());
    GradedDims out(c);
    for (int i = 0; i <= c; ++i) {
        if (!dims_[i])
            continue;
        for (int j = 0; i + j <= c; ++j)
            out.dims_[i + j] += dims_[i] * other.dims_[j];
    }
    return out;
}

std::optional<int> GradedDims::first_difference(const GradedDims& other) const
{
    const int c = std::min(cap(), other.cap());
    for (int n = 0; n <= c; ++n)
        if (dims_[n] != other.dims_[n])
            return n;
    return std::nullopt;
}

GradedDims GradedDims::truncated_polynomial(int deg, int height, int cap)
{
    if (deg <= 0)
        throw std::invalid_argument("generator degree must be positive");
    GradedDims out(cap);
    for (int k = 0; k * deg <= cap && (height == 0 || k < height); ++k)
        out.dims_[k * deg] = 1;
    return out;
}

GradedDims GradedDims::unit(int cap)
{
    GradedDims out(cap);
    out.dims_[0] = 1;
    return out;
}

std::string GradedDims::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < dims_.size(); ++i)
        os << (i ? "," : "") << dims_[i];
    os << ')';
    return os.str();
}

}  // namespace loophom
