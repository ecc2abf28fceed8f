// autodiff/ops.cc

// Copyright 2026 The aedadapt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "autodiff/ops.h"

#include <cmath>

namespace aedadapt {
namespace autodiff {

namespace {

Tape& tape_of(Var a) {
  AED_CHECK(a.defined(), "op input is undefined");
  return *a.node()->tape;
}

void check_same_tape(Var a, Var b) {
  AED_CHECK(a.node()->tape == b.node()->tape, "inputs come from different tapes");
}

bool needs(Var a) { return a.node()->needs_grad; }

// --- dense kernels -------------------------------------------------------

Tensor mat_mat(const Tensor& a, const Tensor& b) {
  const int m = a.rows(), k = a.cols(), n = b.cols();
  Tensor out({m, n});
  for (int i = 0; i < m; ++i) {
    const double* arow = a.data() + static_cast<int64_t>(i) * k;
    double* orow = out.data() + static_cast<int64_t>(i) * n;
    for (int p = 0; p < k; ++p) {
      const double av = arow[p];
      if (av == 0.0) continue;
      const double* brow = b.data() + static_cast<int64_t>(p) * n;
      for (int j = 0; j < n; ++j) orow[j] += av * brow[j];
    }
  }
  return out;
}

Tensor vec_mat(const Tensor& a, const Tensor& b) {
  const int k = static_cast<int>(a.size()), n = b.cols();
  Tensor out({n});
  for (int p = 0; p < k; ++p) {
    const double av = a[p];
    if (av == 0.0) continue;
    const double* brow = b.data() + static_cast<int64_t>(p) * n;
    for (int j = 0; j < n; ++j) out[j] += av * brow[j];
  }
  return out;
}

Tensor mat_vec(const Tensor& a, const Tensor& b) {
  const int m = a.rows(), k = a.cols();
  Tensor out({m});
  for (int i = 0; i < m; ++i) {
    const double* arow = a.data() + static_cast<int64_t>(i) * k;
    double s = 0.0;
    for (int p = 0; p < k; ++p) s += arow[p] * b[p];
    out[i] = s;
  }
  return out;
}

// g . b^T for adjoints: [m x n] x [k x n]^T -> [m x k]
Tensor mat_matT(const Tensor& g, const Tensor& b) {
  const int m = g.rows(), n = g.cols(), k = b.rows();
  Tensor out({m, k});
  for (int i = 0; i < m; ++i) {
    const double* grow = g.data() + static_cast<int64_t>(i) * n;
    double* orow = out.data() + static_cast<int64_t>(i) * k;
    for (int p = 0; p < k; ++p) {
      const double* brow = b.data() + static_cast<int64_t>(p) * n;
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += grow[j] * brow[j];
      orow[p] = s;
    }
  }
  return out;
}

// a^T . g for adjoints: [m x k]^T x [m x n] -> [k x n]
Tensor matT_mat(const Tensor& a, const Tensor& g) {
  const int m = a.rows(), k = a.cols(), n = g.cols();
  Tensor out({k, n});
  for (int i = 0; i < m; ++i) {
    const double* arow = a.data() + static_cast<int64_t>(i) * k;
    const double* grow = g.data() + static_cast<int64_t>(i) * n;
    for (int p = 0; p < k; ++p) {
      const double av = arow[p];
      if (av == 0.0) continue;
      double* orow = out.data() + static_cast<int64_t>(p) * n;
      for (int j = 0; j < n; ++j) orow[j] += av * grow[j];
    }
  }
  return out;
}

Tensor outer(const Tensor& a, const Tensor& b) {
  const int m = static_cast<int>(a.size()), n = static_cast<int>(b.size());
  Tensor out({m, n});
  for (int i = 0; i < m; ++i) {
    double* orow = out.data() + static_cast<int64_t>(i) * n;
    for (int j = 0; j < n; ++j) orow[j] = a[i] * b[j];
  }
  return out;
}

template <typename F>
Tensor map_unary(const Tensor& a, F f) {
  Tensor out(a.shape());
  for (int64_t i = 0; i < a.size(); ++i) out[i] = f(a[i]);
  return out;
}

double stable_sigmoid(double x) {
  if (x >= 0.0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  double e = std::exp(x);
  return e / (1.0 + e);
}

// Rows/cols view for the last-axis softmax family.
void last_axis_view(const Tensor& t, int* rows, int* cols) {
  AED_CHECK(t.dim() == 1 || t.dim() == 2,
            "softmax family expects 1-D or 2-D input, got "
                << shape_str(t.shape()));
  if (t.dim() == 1) {
    *rows = 1;
    *cols = static_cast<int>(t.size());
  } else {
    *rows = t.rows();
    *cols = t.cols();
  }
}

}  // namespace

Tensor softmax_rows(const Tensor& z) {
  int rows, cols;
  last_axis_view(z, &rows, &cols);
  Tensor out(z.shape());
  for (int r = 0; r < rows; ++r) {
    const double* zr = z.data() + static_cast<int64_t>(r) * cols;
    double* yr = out.data() + static_cast<int64_t>(r) * cols;
    double mx = zr[0];
    for (int c = 1; c < cols; ++c) mx = std::max(mx, zr[c]);
    double denom = 0.0;
    for (int c = 0; c < cols; ++c) {
      yr[c] = std::exp(zr[c] - mx);
      denom += yr[c];
    }
    for (int c = 0; c < cols; ++c) yr[c] /= denom;
  }
  return out;
}

Tensor log_softmax_rows(const Tensor& z) {
  int rows, cols;
  last_axis_view(z, &rows, &cols);
  Tensor out(z.shape());
  for (int r = 0; r < rows; ++r) {
    const double* zr = z.data() + static_cast<int64_t>(r) * cols;
    double* yr = out.data() + static_cast<int64_t>(r) * cols;
    double mx = zr[0];
    for (int c = 1; c < cols; ++c) mx = std::max(mx, zr[c]);
    double denom = 0.0;
    for (int c = 0; c < cols; ++c) denom += std::exp(zr[c] - mx);
    const double lse = mx + std::log(denom);
    for (int c = 0; c < cols; ++c) yr[c] = zr[c] - lse;
  }
  return out;
}

// --- recorded primitives -------------------------------------------------

Var matmul(Var a, Var b) {
  Tape& t = tape_of(a);
  check_same_tape(a, b);
  const Tensor& av = a.value();
  const Tensor& bv = b.value();
  const bool a2 = av.dim() == 2, b2 = bv.dim() == 2;
  AED_CHECK(av.dim() <= 2 && bv.dim() <= 2,
            "matmul: unsupported ranks " << shape_str(av.shape()) << " vs "
                                         << shape_str(bv.shape()));
  const int inner_a = a2 ? av.cols() : static_cast<int>(av.size());
  const int inner_b = b2 ? bv.rows() : static_cast<int>(bv.size());
  AED_CHECK(inner_a == inner_b, "matmul: shape mismatch "
                                    << shape_str(av.shape()) << " vs "
                                    << shape_str(bv.shape()));
  Tensor out;
  if (a2 && b2) {
    out = mat_mat(av, bv);
  } else if (!a2 && b2) {
    out = vec_mat(av, bv);
  } else if (a2 && !b2) {
    out = mat_vec(av, bv);
  } else {
    double s = 0.0;
    for (int64_t i = 0; i < av.size(); ++i) s += av[i] * bv[i];
    out = Tensor::scalar(s);
  }
  const bool ng = needs(a) || needs(b);
  if (!ng) return t.constant(std::move(out));
  Node* an = a.node();
  Node* bn = b.node();
  return t.record(std::move(out), true, [an, bn, a2, b2](Node& self) {
    const Tensor& g = self.grad;
    const Tensor& av = an->value;
    const Tensor& bv = bn->value;
    if (a2 && b2) {
      if (an->needs_grad) Tape::accum(an, mat_matT(g, bv));
      if (bn->needs_grad) Tape::accum(bn, matT_mat(av, g));
    } else if (!a2 && b2) {
      if (an->needs_grad) Tape::accum(an, mat_vec(bv, g));
      if (bn->needs_grad) Tape::accum(bn, outer(av, g));
    } else if (a2 && !b2) {
      if (an->needs_grad) Tape::accum(an, outer(g, bv));
      if (bn->needs_grad) Tape::accum(bn, vec_mat(g, av));
    } else {
      if (an->needs_grad) Tape::accum_scaled(an, g.item(), bv);
      if (bn->needs_grad) Tape::accum_scaled(bn, g.item(), av);
    }
  });
}

Var add(Var a, Var b) {
  Tape& t = tape_of(a);
  check_same_tape(a, b);
  AED_CHECK(a.value().same_shape(b.value()),
            "add: shape mismatch " << shape_str(a.value().shape()) << " vs "
                                   << shape_str(b.value().shape()));
  Tensor out = a.value();
  out.add_(b.value());
  const bool ng = needs(a) || needs(b);
  if (!ng) return t.constant(std::move(out));
  Node* an = a.node();
  Node* bn = b.node();
  return t.record(std::move(out), true, [an, bn](Node& self) {
    Tape::accum(an, self.grad);
    Tape::accum(bn, self.grad);
  });
}

Var add_rowvec(Var m, Var v) {
  Tape& t = tape_of(m);
  check_same_tape(m, v);
  const Tensor& mv = m.value();
  const Tensor& vv = v.value();
  AED_CHECK(mv.dim() == 2 && vv.dim() == 1 && mv.cols() == vv.size(),
            "add_rowvec: shape mismatch " << shape_str(mv.shape()) << " vs "
                                          << shape_str(vv.shape()));
  Tensor out = mv;
  const int rows = mv.rows(), cols = mv.cols();
  for (int r = 0; r < rows; ++r) {
    double* orow = out.data() + static_cast<int64_t>(r) * cols;
    for (int c = 0; c < cols; ++c) orow[c] += vv[c];
  }
  const bool ng = needs(m) || needs(v);
  if (!ng) return t.constant(std::move(out));
  Node* mn = m.node();
  Node* vn = v.node();
  return t.record(std::move(out), true, [mn, vn, rows, cols](Node& self) {
    Tape::accum(mn, self.grad);
    if (vn->needs_grad) {
      Tensor gv({cols});
      for (int r = 0; r < rows; ++r) {
        const double* grow = self.grad.data() + static_cast<int64_t>(r) * cols;
        for (int c = 0; c < cols; ++c) gv[c] += grow[c];
      }
      Tape::accum(vn, gv);
    }
  });
}

Var add_scalar(Var a, Var s) {
  Tape& t = tape_of(a);
  check_same_tape(a, s);
  AED_CHECK(s.value().size() == 1, "add_scalar: scalar operand is "
                                       << shape_str(s.value().shape()));
  const double sv = s.value().item();
  Tensor out = map_unary(a.value(), [sv](double x) { return x + sv; });
  const bool ng = needs(a) || needs(s);
  if (!ng) return t.constant(std::move(out));
  Node* an = a.node();
  Node* sn = s.node();
  return t.record(std::move(out), true, [an, sn](Node& self) {
    Tape::accum(an, self.grad);
    if (sn->needs_grad) {
      double g = 0.0;
      for (int64_t i = 0; i < self.grad.size(); ++i) g += self.grad[i];
      Tape::accum(sn, Tensor::scalar(g));
    }
  });
}

Var mul(Var a, Var b) {
  Tape& t = tape_of(a);
  check_same_tape(a, b);
  AED_CHECK(a.value().same_shape(b.value()),
            "mul: shape mismatch " << shape_str(a.value().shape()) << " vs "
                                   << shape_str(b.value().shape()));
  const Tensor& av = a.value();
  const Tensor& bv = b.value();
  Tensor out(av.shape());
  for (int64_t i = 0; i < av.size(); ++i) out[i] = av[i] * bv[i];
  const bool ng = needs(a) || needs(b);
  if (!ng) return t.constant(std::move(out));
  Node* an = a.node();
  Node* bn = b.node();
  return t.record(std::move(out), true, [an, bn](Node& self) {
    const Tensor& g = self.grad;
    if (an->needs_grad) {
      Tensor ga(g.shape());
      for (int64_t i = 0; i < g.size(); ++i) ga[i] = g[i] * bn->value[i];
      Tape::accum(an, ga);
    }
    if (bn->needs_grad) {
      Tensor gb(g.shape());
      for (int64_t i = 0; i < g.size(); ++i) gb[i] = g[i] * an->value[i];
      Tape::accum(bn, gb);
    }
  });
}

Var mul_scalar(Var a, Var s) {
  Tape& t = tape_of(a);
  check_same_tape(a, s);
  AED_CHECK(s.value().size() == 1, "mul_scalar: scalar operand is "
                                       << shape_str(s.value().shape()));
  const double sv = s.value().item();
  Tensor out = map_unary(a.value(), [sv](double x) { return x * sv; });
  const bool ng = needs(a) || needs(s);
  if (!ng) return t.constant(std::move(out));
  Node* an = a.node();
  Node* sn = s.node();
  return t.record(std::move(out), true, [an, sn](Node& self) {
    const double sv = sn->value.item();
    if (an->needs_grad) Tape::accum_scaled(an, sv, self.grad);
    if (sn->needs_grad) {
      double g = 0.0;
      for (int64_t i = 0; i < self.grad.size(); ++i)
        g += self.grad[i] * an->value[i];
      Tape::accum(sn, Tensor::scalar(g));
    }
  });
}

Var scale(Var a, double c) {
  Tape& t = tape_of(a);
  Tensor out = map_unary(a.value(), [c](double x) { return x * c; });
  if (!needs(a)) return t.constant(std::move(out));
  Node* an = a.node();
  return t.record(std::move(out), true, [an, c](Node& self) {
    Tape::accum_scaled(an, c, self.grad);
  });
}

Var add_const(Var a, double c) {
  Tape& t = tape_of(a);
  Tensor out = map_unary(a.value(), [c](double x) { return x + c; });
  if (!needs(a)) return t.constant(std::move(out));
  Node* an = a.node();
  return t.record(std::move(out), true,
                  [an](Node& self) { Tape::accum(an, self.grad); });
}

Var pow_const(Var a, double p) {
  Tape& t = tape_of(a);
  const bool integer_p = p == std::floor(p) && p >= 0.0;
  if (!integer_p) {
    for (int64_t i = 0; i < a.value().size(); ++i) {
      if (!(a.value()[i] > 0.0))
        AED_THROW(ErrorKind::kDomain,
                  "pow_const: non-positive base " << a.value()[i]
                                                  << " with exponent " << p);
    }
  }
  Tensor out = map_unary(a.value(), [p](double x) { return std::pow(x, p); });
  if (!needs(a)) return t.constant(std::move(out));
  Node* an = a.node();
  return t.record(std::move(out), true, [an, p](Node& self) {
    Tensor ga(self.grad.shape());
    for (int64_t i = 0; i < ga.size(); ++i)
      ga[i] = self.grad[i] * p * std::pow(an->value[i], p - 1.0);
    Tape::accum(an, ga);
  });
}

Var tanh(Var a) {
  Tape& t = tape_of(a);
  Tensor out = map_unary(a.value(), [](double x) { return std::tanh(x); });
  if (!needs(a)) return t.constant(std::move(out));
  Node* an = a.node();
  return t.record(std::move(out), true, [an](Node& self) {
    Tensor ga(self.grad.shape());
    for (int64_t i = 0; i < ga.size(); ++i) {
      const double y = self.value[i];
      ga[i] = self.grad[i] * (1.0 - y * y);
    }
    Tape::accum(an, ga);
  });
}

Var sigmoid(Var a) {
  Tape& t = tape_of(a);
  Tensor out = map_unary(a.value(), stable_sigmoid);
  if (!needs(a)) return t.constant(std::move(out));
  Node* an = a.node();
  return t.record(std::move(out), true, [an](Node& self) {
    Tensor ga(self.grad.shape());
    for (int64_t i = 0; i < ga.size(); ++i) {
      const double y = self.value[i];
      ga[i] = self.grad[i] * y * (1.0 - y);
    }
    Tape::accum(an, ga);
  });
}

Var exp(Var a) {
  Tape& t = tape_of(a);
  Tensor out = map_unary(a.value(), [](double x) { return std::exp(x); });
  if (!needs(a)) return t.constant(std::move(out));
  Node* an = a.node();
  return t.record(std::move(out), true, [an](Node& self) {
    Tensor ga(self.grad.shape());
    for (int64_t i = 0; i < ga.size(); ++i) ga[i] = self.grad[i] * self.value[i];
    Tape::accum(an, ga);
  });
}

Var log(Var a) {
  Tape& t = tape_of(a);
  for (int64_t i = 0; i < a.value().size(); ++i) {
    if (!(a.value()[i] > 0.0))
      AED_THROW(ErrorKind::kDomain, "log: non-positive input " << a.value()[i]);
  }
  Tensor out = map_unary(a.value(), [](double x) { return std::log(x); });
  if (!needs(a)) return t.constant(std::move(out));
  Node* an = a.node();
  return t.record(std::move(out), true, [an](Node& self) {
    Tensor ga(self.grad.shape());
    for (int64_t i = 0; i < ga.size(); ++i) ga[i] = self.grad[i] / an->value[i];
    Tape::accum(an, ga);
  });
}

Var log_sigmoid(Var a) {
  Tape& t = tape_of(a);
  // log(sigmoid(x)) = -log1p(exp(-x)) for x >= 0, x - log1p(exp(x)) otherwise.
  Tensor out = map_unary(a.value(), [](double x) {
    return x >= 0.0 ? -std::log1p(std::exp(-x)) : x - std::log1p(std::exp(x));
  });
  if (!needs(a)) return t.constant(std::move(out));
  Node* an = a.node();
  return t.record(std::move(out), true, [an](Node& self) {
    Tensor ga(self.grad.shape());
    for (int64_t i = 0; i < ga.size(); ++i)
      ga[i] = self.grad[i] * stable_sigmoid(-an->value[i]);
    Tape::accum(an, ga);
  });
}

Var concat(Var a, Var b) {
  Tape& t = tape_of(a);
  check_same_tape(a, b);
  AED_CHECK(a.value().dim() == 1 && b.value().dim() == 1,
            "concat: expects 1-D inputs, got " << shape_str(a.value().shape())
                                               << " and "
                                               << shape_str(b.value().shape()));
  const int na = static_cast<int>(a.value().size());
  const int nb = static_cast<int>(b.value().size());
  Tensor out({na + nb});
  for (int i = 0; i < na; ++i) out[i] = a.value()[i];
  for (int i = 0; i < nb; ++i) out[na + i] = b.value()[i];
  const bool ng = needs(a) || needs(b);
  if (!ng) return t.constant(std::move(out));
  Node* an = a.node();
  Node* bn = b.node();
  return t.record(std::move(out), true, [an, bn, na, nb](Node& self) {
    if (an->needs_grad) {
      Tensor ga({na});
      for (int i = 0; i < na; ++i) ga[i] = self.grad[i];
      Tape::accum(an, ga);
    }
    if (bn->needs_grad) {
      Tensor gb({nb});
      for (int i = 0; i < nb; ++i) gb[i] = self.grad[na + i];
      Tape::accum(bn, gb);
    }
  });
}

Var slice(Var a, int begin, int len) {
  Tape& t = tape_of(a);
  AED_CHECK(a.value().dim() == 1,
            "slice: expects 1-D input, got " << shape_str(a.value().shape()));
  AED_CHECK(begin >= 0 && len >= 1 && begin + len <= a.value().size(),
            "slice: range [" << begin << ", " << begin + len
                             << ") out of bounds for "
                             << shape_str(a.value().shape()));
  Tensor out({len});
  for (int i = 0; i < len; ++i) out[i] = a.value()[begin + i];
  if (!needs(a)) return t.constant(std::move(out));
  Node* an = a.node();
  return t.record(std::move(out), true, [an, begin, len](Node& self) {
    Tensor ga(an->value.shape());
    for (int i = 0; i < len; ++i) ga[begin + i] = self.grad[i];
    Tape::accum(an, ga);
  });
}

Var row(Var m, int r) {
  Tape& t = tape_of(m);
  const Tensor& mv = m.value();
  AED_CHECK(mv.dim() == 2, "row: expects 2-D input, got " << shape_str(mv.shape()));
  AED_CHECK(r >= 0 && r < mv.rows(),
            "row: index " << r << " out of bounds for " << shape_str(mv.shape()));
  const int cols = mv.cols();
  Tensor out({cols});
  for (int c = 0; c < cols; ++c) out[c] = mv.at2(r, c);
  if (!needs(m)) return t.constant(std::move(out));
  Node* mn = m.node();
  return t.record(std::move(out), true, [mn, r, cols](Node& self) {
    Tensor gm(mn->value.shape());
    for (int c = 0; c < cols; ++c) gm.at2(r, c) = self.grad[c];
    Tape::accum(mn, gm);
  });
}

Var stack_rows(const std::vector<Var>& rows) {
  AED_CHECK(!rows.empty(), "stack_rows: no rows");
  Tape& t = tape_of(rows[0]);
  const int d = static_cast<int>(rows[0].value().size());
  const int n = static_cast<int>(rows.size());
  bool ng = false;
  for (const Var& r : rows) {
    check_same_tape(rows[0], r);
    AED_CHECK(r.value().dim() == 1 && r.value().size() == d,
              "stack_rows: inconsistent row shape "
                  << shape_str(r.value().shape()) << " vs [" << d << "]");
    ng = ng || needs(r);
  }
  Tensor out({n, d});
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < d; ++c) out.at2(i, c) = rows[i].value()[c];
  if (!ng) return t.constant(std::move(out));
  std::vector<Node*> ins(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) ins[i] = rows[i].node();
  return t.record(std::move(out), true, [ins, d](Node& self) {
    for (size_t i = 0; i < ins.size(); ++i) {
      if (!ins[i]->needs_grad) continue;
      Tensor gr({d});
      for (int c = 0; c < d; ++c) gr[c] = self.grad.at2(static_cast<int>(i), c);
      Tape::accum(ins[i], gr);
    }
  });
}

Var sum(Var a) {
  Tape& t = tape_of(a);
  double s = 0.0;
  for (int64_t i = 0; i < a.value().size(); ++i) s += a.value()[i];
  if (!needs(a)) return t.constant(Tensor::scalar(s));
  Node* an = a.node();
  return t.record(Tensor::scalar(s), true, [an](Node& self) {
    Tape::accum(an, Tensor::full(an->value.shape(), self.grad.item()));
  });
}

Var mean(Var a) {
  Tape& t = tape_of(a);
  const double n = static_cast<double>(a.value().size());
  double s = 0.0;
  for (int64_t i = 0; i < a.value().size(); ++i) s += a.value()[i];
  if (!needs(a)) return t.constant(Tensor::scalar(s / n));
  Node* an = a.node();
  return t.record(Tensor::scalar(s / n), true, [an, n](Node& self) {
    Tape::accum(an, Tensor::full(an->value.shape(), self.grad.item() / n));
  });
}

Var softmax(Var a) {
  Tape& t = tape_of(a);
  Tensor out = softmax_rows(a.value());
  if (!needs(a)) return t.constant(std::move(out));
  Node* an = a.node();
  return t.record(std::move(out), true, [an](Node& self) {
    // dz_i = y_i * (g_i - sum_j g_j y_j), per row.
    int rows, cols;
    last_axis_view(self.value, &rows, &cols);
    Tensor ga(self.value.shape());
    for (int r = 0; r < rows; ++r) {
      const double* y = self.value.data() + static_cast<int64_t>(r) * cols;
      const double* g = self.grad.data() + static_cast<int64_t>(r) * cols;
      double dot = 0.0;
      for (int c = 0; c < cols; ++c) dot += g[c] * y[c];
      double* o = ga.data() + static_cast<int64_t>(r) * cols;
      for (int c = 0; c < cols; ++c) o[c] = y[c] * (g[c] - dot);
    }
    Tape::accum(an, ga);
  });
}

Var log_softmax(Var a) {
  Tape& t = tape_of(a);
  Tensor out = log_softmax_rows(a.value());
  if (!needs(a)) return t.constant(std::move(out));
  Node* an = a.node();
  return t.record(std::move(out), true, [an](Node& self) {
    // dz_i = g_i - exp(y_i) * sum_j g_j, per row.
    int rows, cols;
    last_axis_view(self.value, &rows, &cols);
    Tensor ga(self.value.shape());
    for (int r = 0; r < rows; ++r) {
      const double* y = self.value.data() + static_cast<int64_t>(r) * cols;
      const double* g = self.grad.data() + static_cast<int64_t>(r) * cols;
      double gs = 0.0;
      for (int c = 0; c < cols; ++c) gs += g[c];
      double* o = ga.data() + static_cast<int64_t>(r) * cols;
      for (int c = 0; c < cols; ++c) o[c] = g[c] - std::exp(y[c]) * gs;
    }
    Tape::accum(an, ga);
  });
}

Var element(Var a, int64_t i) {
  Tape& t = tape_of(a);
  AED_CHECK(i >= 0 && i < a.value().size(),
            "element: index " << i << " out of bounds for "
                              << shape_str(a.value().shape()));
  if (!needs(a)) return t.constant(Tensor::scalar(a.value()[i]));
  Node* an = a.node();
  return t.record(Tensor::scalar(a.value()[i]), true, [an, i](Node& self) {
    Tensor ga(an->value.shape());
    ga[i] = self.grad.item();
    Tape::accum(an, ga);
  });
}

Var embedding_row(Var table, int id) {
  Tape& t = tape_of(table);
  const Tensor& tv = table.value();
  AED_CHECK(tv.dim() == 2, "embedding_row: table is " << shape_str(tv.shape()));
  AED_CHECK(id >= 0 && id < tv.rows(),
            "embedding_row: id " << id << " out of range [0, " << tv.rows()
                                 << ")");
  const int d = tv.cols();
  Tensor out({d});
  for (int c = 0; c < d; ++c) out[c] = tv.at2(id, c);
  if (!needs(table)) return t.constant(std::move(out));
  Node* tn = table.node();
  return t.record(std::move(out), true, [tn, id, d](Node& self) {
    Tensor gt(tn->value.shape());
    for (int c = 0; c < d; ++c) gt.at2(id, c) = self.grad[c];
    Tape::accum(tn, gt);
  });
}

Var grad_reverse(Var a, double lambda) {
  Tape& t = tape_of(a);
  Tensor out = a.value();
  if (!needs(a)) return t.constant(std::move(out));
  Node* an = a.node();
  return t.record(std::move(out), true, [an, lambda](Node& self) {
    Tape::accum_scaled(an, -lambda, self.grad);
  });
}

}  // namespace autodiff
}  // namespace aedadapt
