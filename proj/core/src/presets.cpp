#include "fbeta/presets.hpp"

#include <sstream>

namespace fbeta {

namespace {

FieldElem vpow(const ParamTablePtr& pt, long e) {
  return unit_of({{ParamTable::kQuantum, Rat(e)}}, pt);
}

FieldElem upar(const ParamTablePtr& pt, int id, long e = 1) {
  return unit_of({{id, Rat(e)}}, pt);
}

std::string idx(int i, int j) {
  std::ostringstream os;
  os << "[" << i + 1 << "," << j + 1 << "]";
  return os.str();
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

bool symmetric(const FormTable& t) {
  for (int i = 0; i < t.rank(); ++i)
    for (int j = i + 1; j < t.rank(); ++j)
      if (!(t.at(i, j) == t.at(j, i))) return false;
  return true;
}

}  // namespace

AlgebraInstance preset_two_parameter(const CartanDatum& dm,
                                     const std::vector<std::vector<int>>& omega,
                                     bool alt_gamma) {
  dm.check();
  int n = dm.rank();
  require(static_cast<int>(omega.size()) == n, "omega must be rank x rank");
  for (const auto& row : omega)
    require(static_cast<int>(row.size()) == n, "omega must be rank x rank");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      require(omega[i][j] + omega[j][i] == dm.dot[i][j],
              "omega" + idx(i, j) + " + omega" + idx(j, i) + " must equal i.j");

  auto tbl = std::make_shared<ParamTable>();
  int t = tbl->add({"t", ParamKind::Free, +1});
  ParamTablePtr pt = tbl;

  AlgebraInstance inst;
  inst.preset = "two_parameter";
  inst.label = "two_parameter";
  inst.datum = dm;
  inst.params = pt;
  inst.beta = FormTable::ones(n, pt);
  inst.alpha = FormTable::ones(n, pt);
  inst.gamma = FormTable::ones(n, pt);
  inst.xi = FormTable::ones(n, pt);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int dii = i == j ? omega[i][i] : 0;
      inst.beta.at(i, j) = upar(pt, t, omega[j][i] - omega[i][j]);
      inst.alpha.at(i, j) = upar(pt, t, 2 * (2 * dii - omega[i][j]));
      if (alt_gamma)
        inst.gamma.at(i, j) = unit_of(
            {{ParamTable::kQuantum, Rat(dm.dot[i][j])}, {t, Rat(omega[i][j])}},
            pt);
      else
        inst.gamma.at(i, j) = upar(pt, t, omega[i][j] - 2 * dii);
    }
  return inst;
}

AlgebraInstance preset_super(const CartanDatum& dm, bool alt_gamma) {
  dm.check();
  require(dm.super(), "sign-twisted family needs a parity vector");
  int n = dm.rank();
  for (int i = 0; i < n; ++i) {
    require(dm.d(i) % 2 == dm.p(i),
            "d_" + std::to_string(i + 1) + " must match the declared parity");
    for (int j = i + 1; j < n; ++j)
      require(dm.dot[i][j] % 2 == 0,
              "sign-twisted family needs even i.j off the diagonal");
  }

  auto tbl = std::make_shared<ParamTable>();
  int t = tbl->add({"t", ParamKind::Torsion, -1});
  ParamTablePtr pt = tbl;

  AlgebraInstance inst;
  inst.preset = "super";
  inst.label = "super";
  inst.datum = dm;
  inst.params = pt;
  inst.beta = FormTable::ones(n, pt);
  inst.alpha = FormTable::ones(n, pt);
  inst.gamma = FormTable::ones(n, pt);
  inst.xi = FormTable::ones(n, pt);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long pp2 = 2L * dm.p(i) * dm.p(j);
      inst.beta.at(i, j) = upar(pt, t, dm.dot[i][j] + pp2);
      inst.xi.at(i, j) = upar(pt, t, pp2);
      long ge;
      if (j < i)
        ge = alt_gamma ? 2L * dm.dot[i][j] : dm.dot[i][j];
      else if (j == i)
        ge = dm.d(i);
      else
        ge = alt_gamma ? dm.dot[i][j] + pp2 : pp2;
      inst.gamma.at(i, j) = upar(pt, t, ge);
    }
  return inst;
}

AlgebraInstance preset_multi_parameter(const CartanDatum& dm) {
  dm.check();
  int n = dm.rank();
  auto tbl = std::make_shared<ParamTable>();
  std::vector<std::vector<int>> qid(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      qid[i][j] = tbl->add({"q" + idx(i, j), ParamKind::Free, +1});
  ParamTablePtr pt = tbl;

  FormTable q = FormTable::ones(n, pt);
  for (int i = 0; i < n; ++i) {
    q.at(i, i) = vpow(pt, -2 * dm.d(i));
    for (int j = i + 1; j < n; ++j) {
      q.at(i, j) = upar(pt, qid[i][j]);
      q.at(j, i) = unit_of(
          {{ParamTable::kQuantum, Rat(-2 * dm.dot[i][j])}, {qid[i][j], Rat(-1)}},
          pt);
    }
  }

  AlgebraInstance inst;
  inst.preset = "multi_parameter";
  inst.label = "multi_parameter";
  inst.datum = dm;
  inst.params = pt;
  inst.beta = FormTable::ones(n, pt);
  inst.alpha = q;
  inst.gamma = FormTable::ones(n, pt);
  inst.xi = FormTable::ones(n, pt);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      inst.beta.at(i, j) = vpow(pt, dm.dot[i][j]) * q.at(i, j);
      inst.gamma.at(i, j) = unit_sqrt(q.at(j, i));
      if (i == j) inst.gamma.at(i, j) = q.at(i, i) * inst.gamma.at(i, j);
    }
  return inst;
}

AlgebraInstance preset_multi_super_I(const CartanDatum& dm, ParamTablePtr pt,
                                     std::vector<FieldElem> p_diag,
                                     FormTable p, FormTable s) {
  dm.check();
  int n = dm.rank();
  require(static_cast<int>(p_diag.size()) == n, "p_diag must have one unit per index");
  require(p.present() && p.rank() == n && s.present() && s.rank() == n,
          "p and s tables must be rank x rank");
  for (int i = 0; i < n; ++i) {
    require(p_diag[static_cast<size_t>(i)].is_unit(),
            "p" + idx(i, i) + " diagonal parameter must be a unit");
    for (int j = 0; j < n; ++j)
      require(p.at(i, j).is_unit() && s.at(i, j).is_unit(),
              "p/s entries must be units at " + idx(i, j));
  }
  for (int i = 0; i < n; ++i) {
    const FieldElem& pi = p_diag[static_cast<size_t>(i)];
    require((pi * vpow(pt, -dm.d(i))).pow(2).is_one(),
            "(p_" + std::to_string(i + 1) + " / v_" + std::to_string(i + 1) +
                ")^2 must be 1");
    require(p.at(i, i) == pi.pow(2) * s.at(i, i),
            "p" + idx(i, i) + " must equal p_i^2 s" + idx(i, i));
    for (int j = 0; j < n; ++j) {
      require(p.at(i, j).pow(2) == pi.pow(2L * dm.a(i, j)),
              "p" + idx(i, j) + "^2 must equal p_i^(2 a_ij)");
      require(p.at(i, j) * p.at(j, i) ==
                  pi.pow(2L * dm.a(i, j)) * s.at(i, j) * s.at(j, i),
              "p" + idx(i, j) + " p" + idx(j, i) +
                  " must equal p_i^(2 a_ij) s" + idx(i, j) + " s" + idx(j, i));
    }
  }

  AlgebraInstance inst;
  inst.preset = "multi_super_I";
  inst.label = "multi_super_I";
  inst.datum = dm;
  inst.params = pt;
  inst.beta = FormTable::ones(n, pt);
  inst.alpha = FormTable::ones(n, pt);
  inst.gamma = FormTable::ones(n, pt);
  for (int i = 0; i < n; ++i) {
    FieldElem h_i = p_diag[static_cast<size_t>(i)] * vpow(pt, -dm.d(i));
    for (int j = 0; j < n; ++j) {
      inst.beta.at(i, j) =
          s.at(j, i).inverse() * p.at(j, i) * vpow(pt, -dm.dot[i][j]);
      inst.alpha.at(i, j) = s.at(i, j) * p.at(i, j).inverse();
      if (j < i)
        inst.gamma.at(i, j) =
            s.at(i, j).inverse() * h_i.pow(dm.a(i, j)) * s.at(j, i);
      else if (j == i)
        inst.gamma.at(i, j) = s.at(i, i);
      else
        inst.gamma.at(i, j) = p.at(i, j) *
                              p_diag[static_cast<size_t>(j)].pow(-dm.a(j, i)) *
                              s.at(j, i).inverse();
    }
  }
  if (symmetric(s)) {
    inst.xi = FormTable::ones(n, pt);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) inst.xi.at(i, j) = s.at(i, j).inverse();
  }
  return inst;
}

AlgebraInstance preset_multi_super_II(const CartanDatum& dm, ParamTablePtr pt,
                                      FormTable s_tilde) {
  dm.check();
  int n = dm.rank();
  require(s_tilde.present() && s_tilde.rank() == n,
          "s~ table must be rank x rank");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      require(s_tilde.at(i, j).is_unit(), "s~ entries must be units at " + idx(i, j));
  for (int i = 0; i < n; ++i) {
    require(s_tilde.at(i, i) == vpow(pt, -2 * dm.d(i)),
            "s~" + idx(i, i) + " must equal v_i^-2");
    for (int j = 0; j < n; ++j)
      require(s_tilde.at(i, j) * s_tilde.at(j, i) == vpow(pt, -2 * dm.dot[i][j]),
              "s~" + idx(i, j) + " s~" + idx(j, i) + " must equal v_i^(-2 a_ij)");
  }

  AlgebraInstance inst;
  inst.preset = "multi_super_II";
  inst.label = "multi_super_II";
  inst.datum = dm;
  inst.params = pt;
  inst.beta = FormTable::ones(n, pt);
  inst.alpha = s_tilde;
  inst.gamma = FormTable::ones(n, pt);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      inst.beta.at(i, j) = s_tilde.at(i, j) * vpow(pt, dm.dot[i][j]);
      if (j < i)
        inst.gamma.at(i, j) = s_tilde.at(j, i);
      else if (j == i)
        inst.gamma.at(i, j) = s_tilde.at(i, i).pow(3);
      else
        inst.gamma.at(i, j) = vpow(pt, -dm.dot[i][j]);
    }
  if (symmetric(s_tilde)) {
    inst.xi = FormTable::ones(n, pt);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        inst.xi.at(i, j) = s_tilde.at(i, j).inverse();
  }
  return inst;
}

namespace canon {

CartanDatum a2() { return {{}, {{2, -1}, {-1, 2}}, {}}; }
CartanDatum b2() { return {{}, {{4, -2}, {-2, 2}}, {}}; }
CartanDatum a2_doubled() { return {{}, {{4, -2}, {-2, 4}}, {0, 0}}; }
CartanDatum b2_super() { return {{}, {{4, -2}, {-2, 2}}, {0, 1}}; }
CartanDatum a3() {
  return {{}, {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {}};
}
CartanDatum b3_super() {
  return {{}, {{4, -2, 0}, {-2, 4, -2}, {0, -2, 2}}, {0, 0, 1}};
}

namespace {

// Upper-triangular refinement of the dot pairing: omega_ii = d_i,
// omega_ij = i.j above the diagonal, 0 below.
std::vector<std::vector<int>> upper_omega(const CartanDatum& dm) {
  int n = dm.rank();
  std::vector<std::vector<int>> om(static_cast<size_t>(n),
                                   std::vector<int>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    om[static_cast<size_t>(i)][static_cast<size_t>(i)] = dm.d(i);
    for (int j = i + 1; j < n; ++j)
      om[static_cast<size_t>(i)][static_cast<size_t>(j)] = dm.dot[i][j];
  }
  return om;
}

AlgebraInstance msi_canonical(const CartanDatum& dm, const std::string& label) {
  int n = dm.rank();
  auto tbl = std::make_shared<ParamTable>();
  std::vector<std::vector<int>> sid(static_cast<size_t>(n),
                                    std::vector<int>(static_cast<size_t>(n), -1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      sid[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          tbl->add({"s" + idx(i, j), ParamKind::Torsion, +1});
  ParamTablePtr pt = tbl;
  FormTable s = FormTable::ones(n, pt);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      FieldElem u = upar(pt, sid[static_cast<size_t>(i)][static_cast<size_t>(j)]);
      s.at(i, j) = u;
      s.at(j, i) = u;
    }
  FormTable p = FormTable::ones(n, pt);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) p.at(i, j) = vpow(pt, dm.dot[i][j]);
  std::vector<FieldElem> pd;
  for (int i = 0; i < n; ++i) pd.push_back(vpow(pt, dm.d(i)));
  AlgebraInstance inst = preset_multi_super_I(dm, pt, pd, p, s);
  inst.label = label;
  return inst;
}

AlgebraInstance msii_canonical(const CartanDatum& dm, const std::string& label) {
  int n = dm.rank();
  auto tbl = std::make_shared<ParamTable>();
  std::vector<std::vector<int>> hid(static_cast<size_t>(n),
                                    std::vector<int>(static_cast<size_t>(n), -1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      hid[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          tbl->add({"h" + idx(i, j), ParamKind::Torsion, +1});
  ParamTablePtr pt = tbl;
  FormTable st = FormTable::ones(n, pt);
  for (int i = 0; i < n; ++i) {
    st.at(i, i) = vpow(pt, -2 * dm.d(i));
    for (int j = i + 1; j < n; ++j) {
      FieldElem e = unit_of({{ParamTable::kQuantum, Rat(-dm.dot[i][j])},
                             {hid[static_cast<size_t>(i)][static_cast<size_t>(j)], Rat(1)}},
                            pt);
      st.at(i, j) = e;
      st.at(j, i) = e;
    }
  }
  AlgebraInstance inst = preset_multi_super_II(dm, pt, st);
  inst.label = label;
  return inst;
}

}  // namespace

AlgebraInstance two_parameter_a2(bool alt_gamma) {
  CartanDatum dm = a2();
  AlgebraInstance inst = preset_two_parameter(dm, upper_omega(dm), alt_gamma);
  inst.label = alt_gamma ? "two_parameter.a2.altgamma" : "two_parameter.a2";
  return inst;
}

AlgebraInstance two_parameter_b2(bool alt_gamma) {
  CartanDatum dm = b2();
  AlgebraInstance inst = preset_two_parameter(dm, upper_omega(dm), alt_gamma);
  inst.label = alt_gamma ? "two_parameter.b2.altgamma" : "two_parameter.b2";
  return inst;
}

AlgebraInstance two_parameter_a3() {
  CartanDatum dm = a3();
  AlgebraInstance inst = preset_two_parameter(dm, upper_omega(dm), false);
  inst.label = "two_parameter.a3";
  return inst;
}

AlgebraInstance super_a2(bool alt_gamma) {
  AlgebraInstance inst = preset_super(a2_doubled(), alt_gamma);
  inst.label = alt_gamma ? "super.a2.altgamma" : "super.a2";
  return inst;
}

AlgebraInstance super_b2(bool alt_gamma) {
  AlgebraInstance inst = preset_super(b2_super(), alt_gamma);
  inst.label = alt_gamma ? "super.b2.altgamma" : "super.b2";
  return inst;
}

AlgebraInstance super_b3() {
  AlgebraInstance inst = preset_super(b3_super(), false);
  inst.label = "super.b3";
  return inst;
}

AlgebraInstance multi_parameter_a2() {
  AlgebraInstance inst = preset_multi_parameter(a2());
  inst.label = "multi_parameter.a2";
  return inst;
}

AlgebraInstance multi_parameter_b2() {
  AlgebraInstance inst = preset_multi_parameter(b2());
  inst.label = "multi_parameter.b2";
  return inst;
}

AlgebraInstance multi_super_i_a2() {
  return msi_canonical(a2_doubled(), "multi_super_I.a2");
}

AlgebraInstance multi_super_i_b2() {
  return msi_canonical(b2_super(), "multi_super_I.b2");
}

AlgebraInstance multi_super_i_b2_asym() {
  CartanDatum dm = b2_super();
  auto tbl = std::make_shared<ParamTable>();
  int h1 = tbl->add({"h[1]", ParamKind::Torsion, +1});
  int h2 = tbl->add({"h[2]", ParamKind::Torsion, +1});
  int s12 = tbl->add({"s[1,2]", ParamKind::Torsion, +1});
  ParamTablePtr pt = tbl;
  int a12 = dm.a(0, 1), a21 = dm.a(1, 0);
  FormTable s = FormTable::ones(2, pt);
  s.at(0, 1) = upar(pt, s12);
  // s_21 = h_1^(a_12) h_2^(a_21) s_12^-1: asymmetric for order-2 h_i
  s.at(1, 0) =
      unit_of({{h1, Rat(a12)}, {h2, Rat(a21)}, {s12, Rat(-1)}}, pt);
  FormTable p = FormTable::ones(2, pt);
  std::vector<int> hid{h1, h2};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      p.at(i, j) = unit_of({{ParamTable::kQuantum, Rat(dm.dot[i][j])},
                            {hid[static_cast<size_t>(i)], Rat(dm.a(i, j))}},
                           pt);
  std::vector<FieldElem> pd;
  for (int i = 0; i < 2; ++i)
    pd.push_back(unit_of({{ParamTable::kQuantum, Rat(dm.d(i))},
                          {hid[static_cast<size_t>(i)], Rat(1)}},
                         pt));
  AlgebraInstance inst = preset_multi_super_I(dm, pt, pd, p, s);
  inst.label = "multi_super_I.b2_asym";
  return inst;
}

AlgebraInstance multi_super_ii_a2() {
  return msii_canonical(a2_doubled(), "multi_super_II.a2");
}

AlgebraInstance multi_super_ii_b2() {
  return msii_canonical(b2_super(), "multi_super_II.b2");
}

std::vector<AlgebraInstance> all_double_ready() {
  std::vector<AlgebraInstance> v;
  v.push_back(two_parameter_a2());
  v.push_back(two_parameter_b2());
  v.push_back(super_a2());
  v.push_back(super_b2());
  v.push_back(multi_parameter_a2());
  v.push_back(multi_parameter_b2());
  v.push_back(multi_super_i_a2());
  v.push_back(multi_super_i_b2());
  v.push_back(multi_super_ii_a2());
  v.push_back(multi_super_ii_b2());
  return v;
}

}  // namespace canon

}  // namespace fbeta
