// tests/test_autodiff.cc

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>

#include "autodiff/gradcheck.h"
#include "autodiff/graph.h"
#include "autodiff/ops.h"
#include "testing.h"

using namespace aedadapt;
using namespace aedadapt::autodiff;
using aedadapt::testing::bitwise_equal;
using aedadapt::testing::max_abs_diff;
using aedadapt::testing::random_tensor;

namespace {

// Runs finite_diff_check around a graph builder whose output may be any
// shape; a fixed random probe turns it into a scalar loss with O(1)
// per-coordinate gradients.
double fd_error(const std::function<Var(Graph&)>& build,
                std::vector<Parameter*> params, uint64_t probe_seed = 7) {
  Tensor probe;
  auto loss_fn = [&](bool with_grad) {
    Tape tape;
    ParamBind bind;
    bind.mark_all(params);
    Graph g(tape, &bind);
    Var out = build(g);
    if (!probe.defined()) {
      Rng rng(probe_seed);
      probe = random_tensor(rng, out.value().shape(), 0.5, 1.5);
    }
    Var loss = out.value().size() == 1 ? out : sum(mul(out, g.constant(probe)));
    if (with_grad) tape.backward(loss);
    return loss.value().item();
  };
  return finite_diff_check(loss_fn, params, {});
}

}  // namespace

TEST_CASE("row softmax of uniform logits is uniform") {
  Tape tape;
  Var z = tape.constant(Tensor({3}, {0.0, 0.0, 0.0}));
  Var y = softmax(z);
  for (int i = 0; i < 3; ++i)
    CHECK(y.value()[i] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("row softmax is shift invariant") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Tensor z = random_tensor(rng, {5}, -3.0, 3.0);
    Tensor shifted = z;
    const double c = rng.uniform(-10.0, 10.0);
    for (int i = 0; i < 5; ++i) shifted[i] += c;
    Tape tape;
    Var a = softmax(tape.constant(z));
    Var b = softmax(tape.constant(shifted));
    CHECK(max_abs_diff(a.value(), b.value()) < 1e-12);
  }
}

TEST_CASE("row softmax matches direct exp/normalize oracle") {
  Tape tape;
  Var z = tape.constant(Tensor({3}, {1.0, 2.0, 3.0}));
  Var y = softmax(z);
  // Independent oracle: plain exp and normalize at fp64.
  double e[3] = {std::exp(1.0), std::exp(2.0), std::exp(3.0)};
  double denom = e[0] + e[1] + e[2];
  for (int i = 0; i < 3; ++i)
    CHECK(std::fabs(y.value()[i] - e[i] / denom) < 1e-15);
}

TEST_CASE("softmax rows sum to one") {
  Rng rng(12);
  Tensor z = random_tensor(rng, {4, 7}, -5.0, 5.0);
  Tensor y = softmax_rows(z);
  for (int r = 0; r < 4; ++r) {
    double s = 0.0;
    for (int c = 0; c < 7; ++c) s += y.at2(r, c);
    CHECK(std::fabs(s - 1.0) < 1e-12);
  }
}

TEST_CASE("backward of sum gives all-ones gradient") {
  Parameter p("p", Tensor({4}, {0.3, -0.2, 0.9, 1.4}));
  Tape tape;
  Var v = tape.param(p, true);
  tape.backward(sum(v));
  for (int i = 0; i < 4; ++i) CHECK(p.grad[i] == 1.0);
}

TEST_CASE("backward of sum of squares") {
  Parameter p("p", Tensor({2}, {1.0, 2.0}));
  Tape tape;
  Var v = tape.param(p, true);
  tape.backward(sum(mul(v, v)));
  CHECK(p.grad[0] == doctest::Approx(2.0));
  CHECK(p.grad[1] == doctest::Approx(4.0));
}

TEST_CASE("random three-layer composition matches finite differences") {
  Rng rng(21);
  Parameter w1("w1", random_tensor(rng, {5, 4}, -0.7, 0.7));
  Parameter b1("b1", random_tensor(rng, {4}, -0.3, 0.3));
  Parameter w2("w2", random_tensor(rng, {4, 4}, -0.7, 0.7));
  Parameter w3("w3", random_tensor(rng, {4, 3}, -0.7, 0.7));
  Tensor x = random_tensor(rng, {5}, -1.0, 1.0);
  auto build = [&](Graph& g) {
    Var h1 = tanh(add(matmul(g.constant(x), g(w1)), g(b1)));
    Var h2 = sigmoid(matmul(h1, g(w2)));
    return log_softmax(matmul(h2, g(w3)));
  };
  CHECK(fd_error(build, {&w1, &b1, &w2, &w3}) < 1e-6);
}

TEST_CASE("unreachable parameters get exact zero gradients") {
  Parameter used("used", Tensor({2}, {1.0, 2.0}));
  Parameter unused("unused", Tensor({2}, {3.0, 4.0}));
  Tape tape;
  Var u = tape.param(used, true);
  tape.param(unused, true);
  tape.backward(sum(u));
  CHECK(unused.grad[0] == 0.0);
  CHECK(unused.grad[1] == 0.0);
}

TEST_CASE("backward requires a scalar loss") {
  Tape tape;
  Var v = tape.leaf(Tensor({2}, {1.0, 2.0}));
  CHECK_THROWS_WITH_AS(tape.backward(v), doctest::Contains("scalar"), Error);
}

TEST_CASE("backward twice without re-recording is an error") {
  Parameter p("p", Tensor({2}, {1.0, 2.0}));
  Tape tape;
  Var loss = sum(tape.param(p, true));
  tape.backward(loss);
  CHECK_THROWS_AS(tape.backward(loss), Error);
  // Recording fresh work makes backward legal again.
  Var loss2 = sum(tape.param(p, true));
  CHECK_NOTHROW(tape.backward(loss2));
}

TEST_CASE("gradient accumulation is linear across losses") {
  Rng rng(31);
  Tensor init = random_tensor(rng, {3, 3});
  Tensor x = random_tensor(rng, {3});

  auto run = [&](int which) {
    Parameter w("w", init);
    Tape tape;
    ParamBind bind;
    bind.mark(w);
    Graph g(tape, &bind);
    Var h = tanh(matmul(g.constant(x), g(w)));
    Var l1 = sum(h);
    Var l2 = sum(mul(h, h));
    Var loss = which == 0 ? l1 : (which == 1 ? l2 : add(l1, l2));
    tape.backward(loss);
    return w.grad;
  };
  Tensor g1 = run(0);
  Tensor g2 = run(1);
  Tensor g12 = run(2);
  g1.add_(g2);
  CHECK(max_abs_diff(g1, g12) < 1e-12);
}

TEST_CASE("identical forward/backward reproduces bitwise-identical gradients") {
  Rng rng(41);
  Parameter w("w", random_tensor(rng, {4, 4}));
  Tensor x = random_tensor(rng, {4});
  auto run = [&]() {
    w.zero_grad();
    Tape tape;
    ParamBind bind;
    bind.mark(w);
    Graph g(tape, &bind);
    Var h = softmax(matmul(g.constant(x), g(w)));
    tape.backward(sum(mul(h, h)));
    return w.grad;
  };
  Tensor first = run();
  Tensor second = run();
  CHECK(bitwise_equal(first, second));
}

TEST_CASE("shape mismatch reports both shapes") {
  Tape tape;
  Var a = tape.constant(Tensor::zeros({2}));
  Var b = tape.constant(Tensor::zeros({3}));
  try {
    add(a, b);
    FAIL("expected Error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kContract);
    CHECK(std::string(e.what()).find("[2]") != std::string::npos);
    CHECK(std::string(e.what()).find("[3]") != std::string::npos);
  }
}

TEST_CASE("log of non-positive value is a domain error") {
  Tape tape;
  Var a = tape.constant(Tensor({2}, {1.0, -0.5}));
  try {
    log(a);
    FAIL("expected Error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kDomain);
  }
}

TEST_CASE("finite_diff_check rejects epsilon = 0") {
  Parameter p("p", Tensor({1}, {1.0}));
  auto loss_fn = [&](bool) { return p.value[0]; };
  FdCheckOptions opts;
  opts.epsilon = 0.0;
  CHECK_THROWS_AS(finite_diff_check(loss_fn, {&p}, opts), Error);
}

TEST_CASE("finite_diff_check detects a non-deterministic loss") {
  Parameter p("p", Tensor({1}, {1.0}));
  int calls = 0;
  auto loss_fn = [&](bool with_grad) {
    if (with_grad) p.grad[0] = 1.0;
    return p.value[0] + 1e-9 * (calls++);
  };
  try {
    finite_diff_check(loss_fn, {&p});
    FAIL("expected Error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kVerify);
  }
}

TEST_CASE("finite_diff_check is near-exact for a linear loss") {
  Rng rng(51);
  Parameter p("p", random_tensor(rng, {6}));
  Tensor w = random_tensor(rng, {6}, 0.5, 2.0);
  auto loss_fn = [&](bool with_grad) {
    Tape tape;
    ParamBind bind;
    bind.mark(p);
    Graph g(tape, &bind);
    Var loss = sum(mul(g(p), g.constant(w)));
    if (with_grad) tape.backward(loss);
    return loss.value().item();
  };
  CHECK(finite_diff_check(loss_fn, {&p}) < 1e-10);
}

TEST_CASE("every primitive matches central finite differences") {
  Rng rng(61);

  SUBCASE("matmul 2x2") {
    Parameter a("a", random_tensor(rng, {3, 4}));
    Parameter b("b", random_tensor(rng, {4, 2}));
    CHECK(fd_error([&](Graph& g) { return matmul(g(a), g(b)); }, {&a, &b}) < 1e-6);
  }
  SUBCASE("matmul vec-mat and mat-vec") {
    Parameter a("a", random_tensor(rng, {4}));
    Parameter b("b", random_tensor(rng, {4, 3}));
    CHECK(fd_error([&](Graph& g) { return matmul(g(a), g(b)); }, {&a, &b}) < 1e-6);
    Parameter c("c", random_tensor(rng, {3, 4}));
    Parameter d("d", random_tensor(rng, {4}));
    CHECK(fd_error([&](Graph& g) { return matmul(g(c), g(d)); }, {&c, &d}) < 1e-6);
  }
  SUBCASE("matmul dot") {
    Parameter a("a", random_tensor(rng, {5}));
    Parameter b("b", random_tensor(rng, {5}));
    CHECK(fd_error([&](Graph& g) { return matmul(g(a), g(b)); }, {&a, &b}) < 1e-6);
  }
  SUBCASE("add and mul") {
    Parameter a("a", random_tensor(rng, {2, 3}));
    Parameter b("b", random_tensor(rng, {2, 3}));
    CHECK(fd_error([&](Graph& g) { return add(g(a), g(b)); }, {&a, &b}) < 1e-6);
    CHECK(fd_error([&](Graph& g) { return mul(g(a), g(b)); }, {&a, &b}) < 1e-6);
  }
  SUBCASE("add_rowvec add_scalar mul_scalar") {
    Parameter m("m", random_tensor(rng, {3, 4}));
    Parameter v("v", random_tensor(rng, {4}));
    Parameter s("s", random_tensor(rng, {1}, 0.5, 1.5));
    CHECK(fd_error([&](Graph& g) { return add_rowvec(g(m), g(v)); }, {&m, &v}) < 1e-6);
    CHECK(fd_error([&](Graph& g) { return add_scalar(g(m), g(s)); }, {&m, &s}) < 1e-6);
    CHECK(fd_error([&](Graph& g) { return mul_scalar(g(m), g(s)); }, {&m, &s}) < 1e-6);
  }
  SUBCASE("scale add_const pow_const") {
    Parameter a("a", random_tensor(rng, {5}, 0.5, 1.5));
    CHECK(fd_error([&](Graph& g) { return scale(g(a), -1.75); }, {&a}) < 1e-6);
    CHECK(fd_error([&](Graph& g) { return add_const(g(a), 0.37); }, {&a}) < 1e-6);
    CHECK(fd_error([&](Graph& g) { return pow_const(g(a), -0.5); }, {&a}) < 1e-6);
  }
  SUBCASE("tanh sigmoid exp log log_sigmoid") {
    Parameter a("a", random_tensor(rng, {6}, 0.2, 1.2));
    CHECK(fd_error([&](Graph& g) { return tanh(g(a)); }, {&a}) < 1e-6);
    CHECK(fd_error([&](Graph& g) { return sigmoid(g(a)); }, {&a}) < 1e-6);
    CHECK(fd_error([&](Graph& g) { return exp(g(a)); }, {&a}) < 1e-6);
    CHECK(fd_error([&](Graph& g) { return log(g(a)); }, {&a}) < 1e-6);
    CHECK(fd_error([&](Graph& g) { return log_sigmoid(g(a)); }, {&a}) < 1e-6);
  }
  SUBCASE("concat slice row stack_rows") {
    Parameter a("a", random_tensor(rng, {3}));
    Parameter b("b", random_tensor(rng, {4}));
    CHECK(fd_error([&](Graph& g) { return concat(g(a), g(b)); }, {&a, &b}) < 1e-6);
    Parameter c("c", random_tensor(rng, {6}));
    CHECK(fd_error([&](Graph& g) { return slice(g(c), 1, 3); }, {&c}) < 1e-6);
    Parameter m("m", random_tensor(rng, {3, 4}));
    CHECK(fd_error([&](Graph& g) { return row(g(m), 1); }, {&m}) < 1e-6);
    CHECK(fd_error(
              [&](Graph& g) {
                return stack_rows({row(g(m), 2), g(b), row(g(m), 0)});
              },
              {&m, &b}) < 1e-6);
  }
  SUBCASE("sum mean element") {
    Parameter a("a", random_tensor(rng, {2, 3}));
    CHECK(fd_error([&](Graph& g) { return sum(g(a)); }, {&a}) < 1e-6);
    CHECK(fd_error([&](Graph& g) { return mean(g(a)); }, {&a}) < 1e-6);
    CHECK(fd_error([&](Graph& g) { return element(g(a), 4); }, {&a}) < 1e-6);
  }
  SUBCASE("softmax log_softmax") {
    Parameter a("a", random_tensor(rng, {3, 5}, -2.0, 2.0));
    CHECK(fd_error([&](Graph& g) { return softmax(g(a)); }, {&a}) < 1e-6);
    CHECK(fd_error([&](Graph& g) { return log_softmax(g(a)); }, {&a}) < 1e-6);
  }
  SUBCASE("embedding_row") {
    Parameter table("table", random_tensor(rng, {5, 3}));
    CHECK(fd_error(
              [&](Graph& g) {
                return add(embedding_row(g(table), 2), embedding_row(g(table), 4));
              },
              {&table}) < 1e-6);
  }
}

TEST_CASE("grad_reverse negates and scales the gradient") {
  Parameter p("p", Tensor({3}, {0.5, -0.25, 1.0}));
  Tape tape;
  ParamBind bind;
  bind.mark(p);
  Graph g(tape, &bind);
  Tensor w({3}, {2.0, 3.0, 4.0});
  tape.backward(sum(mul(grad_reverse(g(p), 0.5), g.constant(w))));
  CHECK(p.grad[0] == -0.5 * 2.0);
  CHECK(p.grad[1] == -0.5 * 3.0);
  CHECK(p.grad[2] == -0.5 * 4.0);
}

TEST_CASE("frozen bindings never receive gradients") {
  Parameter p("p", Tensor({2}, {1.0, 2.0}));
  Tape tape;
  Graph g(tape, nullptr);  // everything frozen
  Var v = g(p);
  CHECK_FALSE(v.needs_grad());
  tape.backward(sum(mul(v, v)));
  CHECK(p.grad[0] == 0.0);
  CHECK(p.grad[1] == 0.0);
}
