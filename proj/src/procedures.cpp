#include "fpmod/procedures.hpp"

#include <stdexcept>

namespace fpmod {

std::optional<DivideWitness> right_divide_with_witness(const Mat& b, const Mat& a,
                                                       const std::optional<Mat>& l) {
  if (b.cols != a.cols) throw std::runtime_error("shape mismatch in right_divide");
  Mat m = l ? mat_stack(a, *l) : a;
  ReductionResult red = decide_zero(b, m, true);
  if (!red.is_zero) return std::nullopt;
  Mat full = mat_neg(mat_mul(red.transform, red.basis_transform));
  return DivideWitness{col_range(full, 0, a.rows), col_range(full, a.rows, m.rows)};
}

std::optional<Mat> right_divide(const Mat& b, const Mat& a, const std::optional<Mat>& l) {
  auto w = right_divide_with_witness(b, a, l);
  if (!w) return std::nullopt;
  return std::move(w->x);
}

std::optional<Morphism> complete_im_sq(const Morphism& alpha, const Morphism& phi,
                                       const Morphism& beta) {
  if (alpha.target.gens != phi.source.gens || beta.target.gens != phi.target.gens)
    throw std::runtime_error("square corners do not line up in complete_im_sq");
  Mat through = mat_mul(alpha.matrix, phi.matrix);
  auto x = right_divide(through, beta.matrix, phi.target.relations);
  if (!x) return std::nullopt;
  return Morphism{alpha.source, beta.source, std::move(*x)};
}

std::optional<Morphism> leftinverse(const Morphism& beta) {
  auto x = right_divide(Mat::identity(beta.target.ring, beta.target.gens), beta.matrix,
                        beta.target.relations);
  if (!x) return std::nullopt;
  return Morphism{beta.target, beta.source, std::move(*x)};
}

std::optional<Mat> preimage(const Mat& b, const Morphism& alpha) {
  if (b.cols != alpha.target.gens) throw std::runtime_error("shape mismatch in preimage");
  return right_divide(b, alpha.matrix, alpha.target.relations);
}

int Resolution::rank(int i) const {
  if (i < 0) return 0;
  if (i == 0) return reduced.gens;
  if (i <= static_cast<int>(maps.size())) return maps[i - 1].rows;
  return 0;
}

Mat Resolution::map(int i) const {
  if (i < 1) throw std::runtime_error("resolution maps are indexed from 1");
  if (i <= static_cast<int>(maps.size())) return maps[i - 1];
  return Mat::zeros(reduced.ring, 0, rank(i - 1));
}

Presentation Resolution::free_module(int i) const {
  return free_presentation(reduced.ring, rank(i));
}

Morphism Resolution::boundary(int i) const {
  return {free_module(i), free_module(i - 1), map(i)};
}

Morphism Resolution::augmentation() const {
  return {free_module(0), module, change.new_to_old};
}

Resolution resolution_of_module(const Presentation& p, int length) {
  if (length < 0) throw std::runtime_error("resolution length must be nonnegative");
  auto [reduced, change] = better_generators(p);
  Resolution out{p, reduced, change, {}};
  out.maps.push_back(reduced.relations);
  for (int i = 2; i <= length + 1; ++i) {
    if (out.maps.back().rows == 0) break;
    Mat d = syzygies_generators(out.maps.back());
    // A unit in column j says row j of the previous map is redundant: drop it
    // and take syzygies again, so the resolved free modules stay minimal-ish.
    while (true) {
      int uj = -1;
      for (int j = 0; j < d.cols && uj < 0; ++j)
        for (int i2 = 0; i2 < d.rows; ++i2) {
          if (is_zero(d.at(i2, j))) continue;
          if (try_invert(d.ring, d.at(i2, j))) {
            uj = j;
            break;
          }
        }
      if (uj < 0) break;
      out.maps.back() = drop_row(out.maps.back(), uj);
      d = syzygies_generators(out.maps.back());
    }
    out.maps.push_back(d);
    if (d.rows == 0) break;
  }
  out.reduced.relations = out.maps[0];
  return out;
}

Subfactor subfactor_module(const Mat& m1, const Mat& m2) {
  if (m1.cols != m2.cols) throw std::runtime_error("shape mismatch in subfactor_module");
  ReductionResult red = decide_zero(m1, m2);
  Subfactor out;
  out.row_to_gen.assign(m1.rows, -1);
  std::vector<int> keep;
  for (int i = 0; i < m1.rows; ++i) {
    if (row_is_zero(red.reduced, i)) continue;
    out.row_to_gen[i] = static_cast<int>(keep.size());
    keep.push_back(i);
  }
  out.embedding = take_rows(red.reduced, keep);
  Mat rel = syzygies_generators(out.embedding, m2);
  out.pres = make_presentation(m1.ring, out.embedding.rows, rel);
  return out;
}

}  // namespace fpmod
