// eepc: energy-efficient uplink power control for two-tier cellular networks
// Copyright (C) 2026 The eepc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include "eepc/simd/kernels.hpp"

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace eepc {

// Complex column vector in split (planar) layout.
class ComplexVector {
  public:
    ComplexVector() = default;
    explicit ComplexVector(std::size_t n) : re_(n, 0.0), im_(n, 0.0) {}
    ComplexVector(std::initializer_list<std::complex<double>> values)
    {
        re_.reserve(values.size());
        im_.reserve(values.size());
        for (const auto &v : values) {
            re_.push_back(v.real());
            im_.push_back(v.imag());
        }
    }

    std::size_t size() const { return re_.size(); }
    bool empty() const { return re_.empty(); }

    std::complex<double> operator[](std::size_t j) const { return {re_[j], im_[j]}; }
    void set(std::size_t j, std::complex<double> v)
    {
        re_[j] = v.real();
        im_[j] = v.imag();
    }

    const std::vector<double> &re() const { return re_; }
    const std::vector<double> &im() const { return im_; }

    simd::SplitView view() const { return {re_.data(), im_.data(), re_.size()}; }
    simd::SplitMutView mut_view() { return {re_.data(), im_.data(), re_.size()}; }

    friend bool operator==(const ComplexVector &, const ComplexVector &) = default;

  private:
    std::vector<double> re_;
    std::vector<double> im_;
};

} // namespace eepc
