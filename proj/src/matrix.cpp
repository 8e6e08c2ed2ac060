#include "clonelab/matrix.hpp"

namespace clonelab {

namespace {

void require_same_rig(const RigMatrix& a, const RigMatrix& b) {
    if (!a.rig()->equals(*b.rig()))
        throw StructuralError("matrices live over different rigs: " + a.rig()->name() + " vs " +
                              b.rig()->name());
}

} // namespace

RigMatrix::RigMatrix(RigHandle rig, std::size_t rows, std::size_t cols,
                     std::vector<RigValue> entries)
    : rig_(std::move(rig)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw StructuralError("matrix entry count " + std::to_string(entries_.size()) +
                              " does not match " + std::to_string(rows_) + "x" +
                              std::to_string(cols_));
}

RigMatrix RigMatrix::identity(const RigHandle& rig, std::size_t n) {
    RigMatrix m(rig, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = rig->one();
    return m;
}

RigMatrix RigMatrix::row(const RigHandle& rig, std::vector<RigValue> entries) {
    const std::size_t n = entries.size();
    return RigMatrix(rig, 1, n, std::move(entries));
}

bool matrices_equal(const RigMatrix& a, const RigMatrix& b) {
    if (!a.rig()->equals(*b.rig()) || a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        if (!a.rig()->eq(a.entries()[i], b.entries()[i]))
            return false;
    return true;
}

RigMatrix mat_mul(const RigMatrix& a, const RigMatrix& b) {
    require_same_rig(a, b);
    if (a.cols() != b.rows())
        throw StructuralError("matrix product dimension mismatch: " + std::to_string(a.rows()) +
                              "x" + std::to_string(a.cols()) + " times " +
                              std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    const Rig& rig = *a.rig();
    RigMatrix c(a.rig(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            RigValue acc = rig.zero();
            for (std::size_t t = 0; t < a.cols(); ++t)
                acc = rig.add(acc, rig.mul(a.at(i, t), b.at(t, j)));
            c.at(i, j) = acc;
        }
    }
    return c;
}

RigMatrix kron_first(const RigMatrix& x, const RigMatrix& y) {
    require_same_rig(x, y);
    const Rig& rig = *x.rig();
    const std::size_t jp = x.rows(), j = x.cols();
    const std::size_t kp = y.rows(), k = y.cols();
    RigMatrix out(x.rig(), jp * kp, j * k);
    for (std::size_t s = 0; s < kp; ++s)
        for (std::size_t u = 0; u < jp; ++u)
            for (std::size_t t = 0; t < k; ++t)
                for (std::size_t v = 0; v < j; ++v)
                    out.at(u + jp * s, v + j * t) = rig.mul(y.at(s, t), x.at(u, v));
    return out;
}

RigMatrix kron_second(const RigMatrix& x, const RigMatrix& y) {
    require_same_rig(x, y);
    const Rig& rig = *x.rig();
    const std::size_t jp = x.rows(), j = x.cols();
    const std::size_t kp = y.rows(), k = y.cols();
    RigMatrix out(x.rig(), jp * kp, j * k);
    for (std::size_t s = 0; s < kp; ++s)
        for (std::size_t u = 0; u < jp; ++u)
            for (std::size_t t = 0; t < k; ++t)
                for (std::size_t v = 0; v < j; ++v)
                    out.at(u + jp * s, v + j * t) = rig.mul(x.at(u, v), y.at(s, t));
    return out;
}

RigMatrix right_power_block(const RigMatrix& x, std::size_t k) {
    const std::size_t jp = x.rows(), j = x.cols();
    RigMatrix out(x.rig(), jp * k, j * k);
    for (std::size_t t = 0; t < k; ++t)
        for (std::size_t u = 0; u < jp; ++u)
            for (std::size_t v = 0; v < j; ++v)
                out.at(u + jp * t, v + j * t) = x.at(u, v);
    return out;
}

RigMatrix left_power_block(std::size_t jp, const RigMatrix& y) {
    const std::size_t kp = y.rows(), k = y.cols();
    RigMatrix out(y.rig(), jp * kp, jp * k);
    for (std::size_t s = 0; s < kp; ++s)
        for (std::size_t t = 0; t < k; ++t)
            for (std::size_t u = 0; u < jp; ++u)
                out.at(u + jp * s, u + jp * t) = y.at(s, t);
    return out;
}

RigMatrix kron_first_via_blocks(const RigMatrix& x, const RigMatrix& y) {
    require_same_rig(x, y);
    return mat_mul(left_power_block(x.rows(), y), right_power_block(x, y.cols()));
}

bool matrices_commute(const RigMatrix& x, const RigMatrix& y) {
    return matrices_equal(kron_first(x, y), kron_second(x, y));
}

bool is_affine_matrix(const RigMatrix& a) {
    const Rig& rig = *a.rig();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        RigValue sum = rig.zero();
        for (std::size_t j = 0; j < a.cols(); ++j)
            sum = rig.add(sum, a.at(i, j));
        if (!rig.eq(sum, rig.one()))
            return false;
    }
    return true;
}

RigMatrix transpose_to_opposite(const RigMatrix& a) {
    RigMatrix out(opposite_rig(a.rig()), a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.at(j, i) = a.at(i, j);
    return out;
}

} // namespace clonelab
