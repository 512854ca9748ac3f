#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace cyclenet {

/// Dense real symmetric matrix (full storage, row-major).
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;

    explicit SymmetricMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

    std::size_t size() const { return n_; }

    double at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    void set_sym(std::size_t i, std::size_t j, double v) {
        a_[i * n_ + j] = v;
        a_[j * n_ + i] = v;
    }

    void add_sym(std::size_t i, std::size_t j, double v) {
        a_[i * n_ + j] += v;
        if (i != j) a_[j * n_ + i] += v;
    }

    double max_asymmetry() const {
        double worst = 0.0;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                worst = std::max(worst, std::abs(at(i, j) - at(j, i)));
        return worst;
    }

    double trace() const {
        double t = 0.0;
        for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
        return t;
    }

    std::vector<double>& data() { return a_; }
    const std::vector<double>& data() const { return a_; }

private:
    std::size_t n_ = 0;
    std::vector<double> a_;
};

}  // namespace cyclenet
