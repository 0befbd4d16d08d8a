#include "entangle/cli/cli.hpp"
#include "entangle/exact/linalg.hpp"

namespace entangle::cli {

using exact::Mat;
using exact::QSqrt2;
using exact::Rat;
using exact::Vec;

namespace {

// Hermitian 2x2 matrices with real entries, stored as (A11, A12, A21, A22).
Mat psi_map() {
  const Rat h(1, 2);
  return Mat{{h, Rat(0), h}, {Rat(0), h, Rat(0)}, {Rat(0), h, Rat(0)}, {-h, Rat(0), h}};
}

Mat phi_map() { return Mat{{Rat(1), Rat(0), Rat(0), Rat(-1)}, {Rat(0), Rat(1), Rat(1), Rat(0)}, {Rat(1), Rat(0), Rat(0), Rat(1)}}; }

Mat as_2x2(const Vec& a) { return Mat{{a[0], a[1]}, {a[2], a[3]}}; }

bool psd2(const Mat& a) {
  const Rat tr = a(0, 0) + a(1, 1);
  const Rat det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  return a(0, 1) == a(1, 0) && tr.sign() >= 0 && det.sign() >= 0;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
  return k;
}

std::string join(const std::vector<Rat>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : ", ") + x.str();
  return s;
}

}  // namespace

std::vector<QubitCheck> qubit_checks() {
  std::vector<QubitCheck> out;
  const Mat psi = psi_map();
  const Mat phi = phi_map();

  out.push_back({"Phi o Psi = Id", phi * psi == Mat::identity(3), "3x3 product compared exactly"});

  bool kite_ok = true;
  for (const Vec& t : {Vec{Rat(1), Rat(0), Rat(1)}, Vec{Rat(0), Rat(1), Rat(1)}, Vec{Rat(-1), Rat(0), Rat(1)},
                       Vec{Rat(0), Rat(-1), Rat(1)}}) {
    kite_ok = kite_ok && psd2(as_2x2(psi * t));
  }
  out.push_back({"Psi(kite rays) in PSD2", kite_ok, "trace and determinant of the four images are nonnegative"});

  const Mat t1 = as_2x2(psi * Vec{Rat(1), Rat(0), Rat(1)});
  const Mat t2 = as_2x2(psi * Vec{Rat(0), Rat(1), Rat(1)});
  const Mat t3 = as_2x2(psi * Vec{Rat(-1), Rat(0), Rat(1)});
  const Mat t4 = Mat::identity(2) - t2;
  const bool printed = t1 == Mat{{Rat(1), Rat(0)}, {Rat(0), Rat(0)}} &&
                       t2 == Mat{{Rat(1, 2), Rat(1, 2)}, {Rat(1, 2), Rat(1, 2)}} &&
                       t3 == Mat{{Rat(0), Rat(0)}, {Rat(0), Rat(1)}};
  const bool balance = t1 + t3 == t2 + t4 && t1 + t3 == Mat::identity(2);
  out.push_back({"T1..T4 PSD, T1+T3 = T2+T4", printed && balance && psd2(t1) && psd2(t2) && psd2(t3) && psd2(t4),
                 "T4 = I - T2; both sums equal I"});

  const Mat omega = kron(t1, t2) - kron(t2, t2) + kron(t2, t1) + kron(t3, t3);
  const Mat expected = Mat{{Rat(3), Rat(-1), Rat(-1), Rat(-1)},
                           {Rat(-1), Rat(1), Rat(-1), Rat(1)},
                           {Rat(-1), Rat(-1), Rat(1), Rat(1)},
                           {Rat(-1), Rat(1), Rat(1), Rat(3)}} *
                       Rat(1, 4);
  std::string detail = "entry (1,1) = " + omega(0, 0).str();
  if (omega != expected) {
    for (std::size_t i = 0; i < 4 && detail.find("differs") == std::string::npos; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (omega(i, j) != expected(i, j)) {
          detail += "; differs at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): assembled " +
                    omega(i, j).str() + ", expected " + expected(i, j).str();
          break;
        }
    const Mat z = Mat{{Rat(1), Rat(0)}, {Rat(0), Rat(-1)}};
    const Mat zz = kron(z, z);
    if (zz * omega * zz == expected) detail += "; equal after conjugation by Z(x)Z, Z = diag(1,-1)";
  }
  out.push_back({"omega matches the 4x4 matrix", omega == expected, detail});

  const auto ldl = exact::symmetric_ldl(omega);
  bool negative = false;
  for (const auto& p : ldl.pivots) negative = negative || p.sign() < 0;
  out.push_back({"omega not PSD (LDL)", negative, "pivots " + join(ldl.pivots)});

  const QSqrt2 lambda(Rat(1, 2), Rat(-1, 2));
  exact::QMat shifted = exact::to_qsqrt2(omega);
  for (std::size_t i = 0; i < 4; ++i) shifted(i, i) -= lambda;
  const QSqrt2 det = exact::qsqrt2_det(shifted);
  out.push_back({"det(omega - lambda I) = 0", det.is_zero() && lambda.sign() < 0,
                 "lambda = (1-sqrt2)/2, determinant " + det.str()});
  return out;
}

}  // namespace entangle::cli
