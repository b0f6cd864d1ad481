// Copyright 2026 The dndrl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// State-action value network.
//
//   tiles 16x7x7 -> conv3x3 16 -> conv3x3 32 -> conv3x3 64 -> flatten 64
//   action fields -> six embedding tables -> 192
//   [64 | 192 | 13 scalars] = 269 -> 64 -> 32 -> 16 -> 1
//
// All parameters live in one flat vector; layers are Eigen::Map views into
// it, so optimizers and checkpoints work on a single array. ReLU follows
// every layer except the last.

#ifndef DNDRL_NN_H_
#define DNDRL_NN_H_

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "dndrl/observation.h"
#include "dndrl/rng.h"

namespace dndrl {

inline constexpr int kConv1 = 16;
inline constexpr int kConv2 = 32;
inline constexpr int kConv3 = 64;
inline constexpr int kEmbAction = 64;
inline constexpr int kEmbBinary = 16;
inline constexpr int kEmbSubtype = 16;
inline constexpr int kEmbWeapon = 32;
inline constexpr int kEmbEntity = 32;
inline constexpr int kEmbTerrain = 32;
inline constexpr int kEmbTotal = kEmbAction + kEmbBinary + kEmbSubtype +
                                 kEmbWeapon + kEmbEntity + kEmbTerrain;
inline constexpr int kHeadInput = kConv3 + kEmbTotal + kScalarFeatures;
static_assert(kHeadInput == 269);
inline constexpr int kHidden1 = 64;
inline constexpr int kHidden2 = 32;
inline constexpr int kHidden3 = 16;

namespace nn_detail {

struct Block {
  Eigen::Index offset = 0;
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  Eigen::Index size() const { return rows * cols; }
};

struct Layout {
  Block conv_w[3], conv_b[3];
  Block emb[6];  // action, binary, subtype, weapon, entity, terrain
  Block fc_w[4], fc_b[4];
  Eigen::Index total = 0;

  Layout() {
    auto add = [this](Eigen::Index r, Eigen::Index c) {
      Block b{total, r, c};
      total += r * c;
      return b;
    };
    const int conv_in[3] = {kChannels, kConv1, kConv2};
    const int conv_out[3] = {kConv1, kConv2, kConv3};
    for (int i = 0; i < 3; ++i) {
      conv_w[i] = add(conv_out[i], conv_in[i] * 9);
      conv_b[i] = add(conv_out[i], 1);
    }
    const int vocab[6] = {kActionTypeVocab, kBinaryVocab, kSubtypeVocab,
                          kWeaponVocab,     kEntityVocab, kTerrainVocab};
    const int dim[6] = {kEmbAction, kEmbBinary, kEmbSubtype,
                        kEmbWeapon, kEmbEntity, kEmbTerrain};
    // Stored dim x vocab so a token's vector is a contiguous column.
    for (int i = 0; i < 6; ++i) emb[i] = add(dim[i], vocab[i]);
    const int fc_in[4] = {kHeadInput, kHidden1, kHidden2, kHidden3};
    const int fc_out[4] = {kHidden1, kHidden2, kHidden3, 1};
    for (int i = 0; i < 4; ++i) {
      fc_w[i] = add(fc_out[i], fc_in[i]);
      fc_b[i] = add(fc_out[i], 1);
    }
  }
};

inline const Layout& layout() {
  static const Layout l;
  return l;
}

// Column offset of each embedding block inside the head input.
inline constexpr std::array<int, 6> kEmbColumn = {
    kConv3,
    kConv3 + kEmbAction,
    kConv3 + kEmbAction + kEmbBinary,
    kConv3 + kEmbAction + kEmbBinary + kEmbSubtype,
    kConv3 + kEmbAction + kEmbBinary + kEmbSubtype + kEmbWeapon,
    kConv3 + kEmbAction + kEmbBinary + kEmbSubtype + kEmbWeapon + kEmbEntity};
inline constexpr int kScalarColumn = kConv3 + kEmbTotal;

inline std::array<int, 6> tokens(const ActionEncoding& e) {
  const std::array<int, 6> t = {e.action_type,  e.binary_action,
                                e.binary_subtype, e.weapon_type,
                                e.entity_type,  e.terrain_type};
  const std::array<int, 6> vocab = {kActionTypeVocab, kBinaryVocab,
                                    kSubtypeVocab,    kWeaponVocab,
                                    kEntityVocab,     kTerrainVocab};
  for (int i = 0; i < 6; ++i) {
    if (t[i] < 0 || t[i] >= vocab[i]) {
      throw std::out_of_range("action encoding field outside its vocabulary");
    }
  }
  return t;
}

}  // namespace nn_detail

template <typename Scalar>
class QNetwork {
 public:
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using MapMat = Eigen::Map<Mat>;
  using ConstMapMat = Eigen::Map<const Mat>;

  // Per-state intermediate values, shared by every action of that state.
  struct StateCache {
    Mat patches[3];   // im2col inputs of each conv layer
    Mat act[3];       // post-ReLU conv outputs, channels x positions
    Vec scalars;
    Vec h1_base;      // fc1 pre-activation without the embedding blocks
  };

  // All parameters zero.
  QNetwork() : params_(Vec::Zero(nn_detail::layout().total)) {}

  // Linear and conv layers U(-1/sqrt(fan_in), 1/sqrt(fan_in)); embeddings
  // U(-sqrt(3), sqrt(3)) (unit variance).
  static QNetwork initialized(RngStream& rng) {
    QNetwork net;
    const auto& l = nn_detail::layout();
    auto fill = [&](const nn_detail::Block& b, double bound) {
      for (Eigen::Index i = 0; i < b.size(); ++i) {
        net.params_[b.offset + i] =
            static_cast<Scalar>((2 * rng.uniform01() - 1) * bound);
      }
    };
    for (int i = 0; i < 3; ++i) {
      const double bound = 1 / std::sqrt(static_cast<double>(l.conv_w[i].cols));
      fill(l.conv_w[i], bound);
      fill(l.conv_b[i], bound);
    }
    for (int i = 0; i < 6; ++i) fill(l.emb[i], std::sqrt(3.0));
    for (int i = 0; i < 4; ++i) {
      const double bound = 1 / std::sqrt(static_cast<double>(l.fc_w[i].cols));
      fill(l.fc_w[i], bound);
      fill(l.fc_b[i], bound);
    }
    net.sync();
    return net;
  }

  static Eigen::Index num_params() { return nn_detail::layout().total; }

  const Vec& params() const { return params_; }
  // Mutable access marks the projected-embedding cache stale until sync().
  Vec& mutable_params() {
    synced_ = false;
    return params_;
  }
  void set_params(const Vec& p) {
    if (p.size() != num_params()) throw std::invalid_argument("parameter count");
    params_ = p;
    sync();
  }

  // Precomputes fc1's projection of every embedding row so per-action
  // evaluation is a handful of vector adds.
  void sync() {
    const auto& l = nn_detail::layout();
    const ConstMapMat w1 = cview(l.fc_w[0]);
    for (int i = 0; i < 6; ++i) {
      const ConstMapMat e = cview(l.emb[i]);
      projected_[i] = w1.middleCols(nn_detail::kEmbColumn[i], e.rows()) * e;
    }
    synced_ = true;
  }

  StateCache encode_state(const Observation& obs) const {
    const auto& l = nn_detail::layout();
    StateCache c;
    Mat input(kChannels, kViewCells);
    for (int ch = 0; ch < kChannels; ++ch) {
      for (int cell = 0; cell < kViewCells; ++cell) {
        input(ch, cell) = static_cast<Scalar>(obs.tiles[ch * kViewCells + cell]);
      }
    }
    const Mat* in = &input;
    int side = kView;
    for (int i = 0; i < 3; ++i) {
      c.patches[i] = im2col(*in, side);
      c.act[i] = (cview(l.conv_w[i]) * c.patches[i]).colwise() +
                 cview(l.conv_b[i]).col(0);
      c.act[i] = c.act[i].cwiseMax(Scalar(0));
      in = &c.act[i];
      side -= 2;
    }
    c.scalars.resize(kScalarFeatures);
    for (int i = 0; i < kScalarFeatures; ++i) {
      c.scalars[i] = static_cast<Scalar>(obs.scalars[i]);
    }
    const ConstMapMat w1 = cview(l.fc_w[0]);
    c.h1_base = cview(l.fc_b[0]).col(0) +
                w1.leftCols(kConv3) * c.act[2].col(0) +
                w1.middleCols(nn_detail::kScalarColumn, kScalarFeatures) *
                    c.scalars;
    return c;
  }

  Scalar q(const StateCache& c, const ActionEncoding& enc) const {
    const auto& l = nn_detail::layout();
    const auto t = nn_detail::tokens(enc);
    Vec h = c.h1_base;
    if (synced_) {
      for (int i = 0; i < 6; ++i) h += projected_[i].col(t[i]);
    } else {
      const ConstMapMat w1 = cview(l.fc_w[0]);
      for (int i = 0; i < 6; ++i) {
        const ConstMapMat e = cview(l.emb[i]);
        h += w1.middleCols(nn_detail::kEmbColumn[i], e.rows()) * e.col(t[i]);
      }
    }
    h = h.cwiseMax(Scalar(0));
    for (int k = 1; k < 4; ++k) {
      Vec z = cview(l.fc_w[k]) * h + cview(l.fc_b[k]).col(0);
      h = k < 3 ? Vec(z.cwiseMax(Scalar(0))) : z;
    }
    return h[0];
  }

  Scalar q_value(const Observation& obs, const ActionEncoding& enc) const {
    return q(encode_state(obs), enc);
  }

  // Q for every entry of obs.legal, in order.
  std::vector<Scalar> q_all(const Observation& obs) const {
    return q_all(obs, obs.legal);
  }
  std::vector<Scalar> q_all(const Observation& obs,
                            const std::vector<ActionEncoding>& actions) const {
    const StateCache c = encode_state(obs);
    std::vector<Scalar> out;
    out.reserve(actions.size());
    for (const ActionEncoding& a : actions) out.push_back(q(c, a));
    return out;
  }

  // Returns Q(obs, enc) and adds upstream * dQ/dparams into `grad`.
  Scalar accumulate_gradient(const Observation& obs, const ActionEncoding& enc,
                             Scalar upstream, Vec& grad) const {
    const auto& l = nn_detail::layout();
    if (grad.size() != num_params()) grad = Vec::Zero(num_params());
    const auto t = nn_detail::tokens(enc);
    const StateCache c = encode_state(obs);

    // Forward through the head, keeping activations.
    Vec x(kHeadInput);
    x.head(kConv3) = c.act[2].col(0);
    for (int i = 0; i < 6; ++i) {
      const ConstMapMat e = cview(l.emb[i]);
      x.segment(nn_detail::kEmbColumn[i], e.rows()) = e.col(t[i]);
    }
    x.segment(nn_detail::kScalarColumn, kScalarFeatures) = c.scalars;
    Vec a[5];  // a[0] = x, a[k] = output of fc k
    a[0] = x;
    for (int k = 0; k < 4; ++k) {
      Vec z = cview(l.fc_w[k]) * a[k] + cview(l.fc_b[k]).col(0);
      a[k + 1] = k < 3 ? Vec(z.cwiseMax(Scalar(0))) : z;
    }

    // Backward through the head.
    Vec d = Vec::Constant(1, upstream);
    for (int k = 3; k >= 0; --k) {
      if (k < 3) d = d.cwiseProduct(relu_mask(a[k + 1]));
      view(grad, l.fc_w[k]).noalias() += d * a[k].transpose();
      view(grad, l.fc_b[k]).col(0) += d;
      d = cview(l.fc_w[k]).transpose() * d;
    }
    // d is now dL/dx.
    for (int i = 0; i < 6; ++i) {
      const auto& b = l.emb[i];
      view(grad, b).col(t[i]) += d.segment(nn_detail::kEmbColumn[i], b.rows);
    }

    // Backward through the conv stack.
    Mat dact = d.head(kConv3);  // 64 x 1
    int side = 1;
    for (int i = 2; i >= 0; --i) {
      const Mat dz = dact.cwiseProduct(relu_mask(c.act[i]));
      view(grad, l.conv_w[i]).noalias() += dz * c.patches[i].transpose();
      view(grad, l.conv_b[i]).col(0) += dz.rowwise().sum();
      if (i > 0) {
        const Mat dpatch = cview(l.conv_w[i]).transpose() * dz;
        dact = col2im(dpatch, side + 2);
      }
      side += 2;
    }
    return a[4][0];
  }

 private:
  MapMat view(Vec& v, const nn_detail::Block& b) const {
    return MapMat(v.data() + b.offset, b.rows, b.cols);
  }
  ConstMapMat cview(const nn_detail::Block& b) const {
    return ConstMapMat(params_.data() + b.offset, b.rows, b.cols);
  }

  template <typename Derived>
  static Mat relu_mask(const Eigen::MatrixBase<Derived>& activated) {
    return (activated.array() > Scalar(0)).template cast<Scalar>().matrix();
  }

  // in: channels x (side*side), row-major cells. Out: (channels*9) x
  // ((side-2)^2), row index channel*9 + ky*3 + kx.
  static Mat im2col(const Mat& in, int side) {
    const int out_side = side - 2;
    Mat p(in.rows() * 9, out_side * out_side);
    for (Eigen::Index ch = 0; ch < in.rows(); ++ch) {
      for (int ky = 0; ky < 3; ++ky) {
        for (int kx = 0; kx < 3; ++kx) {
          const Eigen::Index row = ch * 9 + ky * 3 + kx;
          for (int oy = 0; oy < out_side; ++oy) {
            for (int ox = 0; ox < out_side; ++ox) {
              p(row, oy * out_side + ox) = in(ch, (oy + ky) * side + ox + kx);
            }
          }
        }
      }
    }
    return p;
  }

  // Adjoint of im2col for an input of the given side.
  static Mat col2im(const Mat& p, int side) {
    const int out_side = side - 2;
    const Eigen::Index channels = p.rows() / 9;
    Mat in = Mat::Zero(channels, side * side);
    for (Eigen::Index ch = 0; ch < channels; ++ch) {
      for (int ky = 0; ky < 3; ++ky) {
        for (int kx = 0; kx < 3; ++kx) {
          const Eigen::Index row = ch * 9 + ky * 3 + kx;
          for (int oy = 0; oy < out_side; ++oy) {
            for (int ox = 0; ox < out_side; ++ox) {
              in(ch, (oy + ky) * side + ox + kx) += p(row, oy * out_side + ox);
            }
          }
        }
      }
    }
    return in;
  }

  Vec params_;
  std::array<Mat, 6> projected_;
  bool synced_ = false;
};

template <typename Scalar>
class Adam {
 public:
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  explicit Adam(Eigen::Index n, Scalar lr = Scalar(1e-3),
                Scalar beta1 = Scalar(0.9), Scalar beta2 = Scalar(0.999),
                Scalar eps = Scalar(1e-8))
      : lr_(lr), beta1_(beta1), beta2_(beta2), eps_(eps),
        m_(Vec::Zero(n)), v_(Vec::Zero(n)) {}

  void step(Vec& params, const Vec& grad) {
    ++t_;
    m_ = beta1_ * m_ + (1 - beta1_) * grad;
    v_ = beta2_ * v_ + (1 - beta2_) * grad.cwiseProduct(grad);
    const Scalar c1 = 1 - std::pow(beta1_, static_cast<Scalar>(t_));
    const Scalar c2 = 1 - std::pow(beta2_, static_cast<Scalar>(t_));
    params.array() -= lr_ * (m_.array() / c1) /
                      ((v_.array() / c2).sqrt() + eps_);
  }

  long steps() const { return t_; }
  const Vec& first_moment() const { return m_; }
  const Vec& second_moment() const { return v_; }
  void restore(long t, Vec m, Vec v) {
    t_ = t;
    m_ = std::move(m);
    v_ = std::move(v);
  }

 private:
  Scalar lr_, beta1_, beta2_, eps_;
  long t_ = 0;
  Vec m_, v_;
};

}  // namespace dndrl

#endif  // DNDRL_NN_H_
