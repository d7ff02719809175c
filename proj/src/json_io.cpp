#include "matseq/json_io.hpp"

#include <cctype>
#include <limits>

namespace matseq::json_io {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::InvalidInput, what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Rational parse_rational(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Rational(Integer(std::to_string(j.get<std::uint64_t>())))
                                  : Rational(Integer(std::to_string(j.get<std::int64_t>())));
  }
  if (!j.is_string()) bad("expected a rational string, got " + j.dump());
  const std::string text = j.get<std::string>();
  const auto slash = text.find('/');
  Integer num, den = 1;
  auto parse_int = [&](const std::string& part, Integer& out) {
    if (part.empty() || out.set_str(part, 10) != 0) bad("malformed number \"" + text + "\"");
  };
  // GMP accepts surrounding whitespace and a leading '+'; keep the grammar strict
  for (char ch : text)
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/')) bad("malformed number \"" + text + "\"");
  if (slash == std::string::npos) {
    parse_int(text, num);
  } else {
    parse_int(text.substr(0, slash), num);
    parse_int(text.substr(slash + 1), den);
  }
  if (den == 0) bad("zero denominator in \"" + text + "\"");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string rational_string(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

Integer parse_integer(const Json& j) {
  Rational q = parse_rational(j);
  if (q.get_den() != 1) bad("expected an integer, got " + j.dump());
  return q.get_num();
}

std::size_t parse_size(const Json& j, const char* what) {
  if (!j.is_number_unsigned()) bad(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

}  // namespace

Ring ring_from_json(const Json& j) {
  const Json& kind = member(j, "kind");
  if (!kind.is_string()) bad("ring kind must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "Z") return Ring::integers();
  if (k == "Q") return Ring::rationals();
  if (k == "Qt") return Ring::uni_poly();
  if (k == "GF") {
    const Integer p = parse_integer(member(j, "p"));
    if (p < 2 || p > Integer(std::to_string(std::numeric_limits<std::uint32_t>::max())))
      fail(ErrorCode::NotPrime, "GF modulus " + p.get_str() + " out of range");
    return Ring::prime_field(p.get_ui());
  }
  if (k == "Qsqrt") return Ring::quad_ext(parse_rational(member(j, "d")));
  bad("unknown ring kind \"" + k + "\"");
}

Json ring_to_json(const Ring& r) {
  Json j;
  switch (r.kind()) {
    case RingKind::Integers: j["kind"] = "Z"; break;
    case RingKind::Rationals: j["kind"] = "Q"; break;
    case RingKind::UniPoly: j["kind"] = "Qt"; break;
    case RingKind::PrimeField:
      j["kind"] = "GF";
      j["p"] = r.modulus();
      break;
    case RingKind::QuadExt:
      j["kind"] = "Qsqrt";
      j["d"] = r.radicand().get_str();
      break;
  }
  return j;
}

Scalar scalar_from_json(const Json& j, const Ring& r) {
  switch (r.kind()) {
    case RingKind::Integers: return Scalar::integer(parse_integer(j));
    case RingKind::Rationals: return Scalar::rational(parse_rational(j));
    case RingKind::PrimeField: return Scalar::residue(r.modulus(), parse_integer(j));
    case RingKind::UniPoly: {
      if (!j.is_array()) bad("polynomial must be an array of coefficients");
      std::vector<Rational> c;
      for (const auto& x : j) c.push_back(parse_rational(x));
      return Scalar::poly(QPoly(std::move(c)));
    }
    case RingKind::QuadExt: {
      if (!j.is_object()) {
        // plain rationals are accepted as elements of the base field
        return Scalar::quad(r, parse_rational(j), 0);
      }
      const Rational a = parse_rational(member(j, "a"));
      Rational b = j.contains("b") ? parse_rational(j.at("b")) : Rational(0);
      if (j.contains("d") && b != 0) {
        // sqrt(d) = k sqrt(radicand) with k = sqrt(d / radicand) rational
        Rational ratio = parse_rational(j.at("d")) / Rational(r.radicand());
        ratio.canonicalize();
        if (ratio <= 0 || !mpz_perfect_square_p(ratio.get_num_mpz_t()) || !mpz_perfect_square_p(ratio.get_den_mpz_t()))
          bad("radicand " + j.at("d").dump() + " does not generate " + r.name());
        Rational k(sqrt(ratio.get_num()), sqrt(ratio.get_den()));
        b *= k;
      }
      return Scalar::quad(r, a, b);
    }
  }
  bad("unsupported ring");
}

Json scalar_to_json(const Scalar& x) {
  switch (x.ring().kind()) {
    case RingKind::Integers: return x.as_integer().get_str();
    case RingKind::Rationals: return rational_string(x.as_rational());
    case RingKind::PrimeField: return x.as_residue();
    case RingKind::UniPoly: {
      Json arr = Json::array();
      for (const auto& c : x.as_poly().coeffs()) arr.push_back(rational_string(c));
      return arr;
    }
    case RingKind::QuadExt: {
      Json j;
      j["a"] = rational_string(x.as_quad().x);
      j["b"] = rational_string(x.as_quad().y);
      j["d"] = x.ring().radicand().get_str();
      return j;
    }
  }
  return nullptr;
}

Mat2 mat_from_json(const Json& j, const Ring& r) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != 2 || j[1].size() != 2)
    bad("matrix must be [[a, b], [c, d]], got " + j.dump());
  return Mat2(scalar_from_json(j[0][0], r), scalar_from_json(j[0][1], r), scalar_from_json(j[1][0], r),
              scalar_from_json(j[1][1], r))
      .promote(r);
}

Json mat_to_json(const Mat2& m) {
  return Json::array({Json::array({scalar_to_json(m.a()), scalar_to_json(m.b())}),
                      Json::array({scalar_to_json(m.c()), scalar_to_json(m.d())})});
}

MatSeq seq_from_json(const Json& j) {
  const Ring r = ring_from_json(member(j, "ring"));
  const Json& ms = member(j, "matrices");
  if (!ms.is_array() || ms.empty()) bad("\"matrices\" must be a non-empty array");
  std::vector<Mat2> terms;
  for (const auto& m : ms) terms.push_back(mat_from_json(m, r));
  return MatSeq(std::move(terms));
}

Json matrices_to_json(const MatSeq& s) {
  Json arr = Json::array();
  for (const auto& m : s) arr.push_back(mat_to_json(m));
  return arr;
}

Json seq_to_json(const MatSeq& s) {
  Json j;
  j["ring"] = ring_to_json(s.ring());
  j["matrices"] = matrices_to_json(s);
  return j;
}

PhiVector phi_from_json(const Json& j) {
  PhiVector v{ring_from_json(member(j, "ring")), parse_size(member(j, "n"), "n"), {}, false};
  const Json& vals = member(j, "values");
  if (!vals.is_array()) bad("\"values\" must be an array");
  for (const auto& x : vals) v.values.push_back(scalar_from_json(x, v.ring));
  return v;
}

Json phi_to_json(const PhiVector& v) {
  Json j;
  j["ring"] = ring_to_json(v.ring);
  j["n"] = v.n;
  Json vals = Json::array();
  for (const auto& x : v.values) vals.push_back(scalar_to_json(x));
  j["values"] = vals;
  j["in_injectivity_domain"] = v.in_injectivity_domain;
  return j;
}

PsiValue psi_from_json(const Json& j) {
  PsiValue v{ring_from_json(member(j, "ring")), {}, {}, false, false};
  auto read = [&](const Json& arr, std::vector<Scalar>& out) {
    if (!arr.is_array()) bad("expected an array of scalars");
    for (const auto& x : arr) out.push_back(scalar_from_json(x, v.ring));
  };
  if (j.contains("traces")) {
    read(j.at("traces"), v.traces);
    read(member(j, "proj"), v.proj);
    if (j.contains("n") && parse_size(j.at("n"), "n") * 2 != v.traces.size()) bad("\"n\" disagrees with \"traces\"");
  } else {
    const std::size_t n = parse_size(member(j, "n"), "n");
    std::vector<Scalar> all;
    read(member(j, "values"), all);
    if (all.size() < 2 * n) bad("\"values\" shorter than the 2n traces");
    v.traces.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(2 * n));
    v.proj.assign(all.begin() + static_cast<std::ptrdiff_t>(2 * n), all.end());
  }
  if (j.contains("full_plucker")) v.full_plucker = j.at("full_plucker").get<bool>();
  return v;
}

Json psi_to_json(const PsiValue& v) {
  Json j;
  j["ring"] = ring_to_json(v.ring);
  j["n"] = v.traces.size() / 2;
  Json t = Json::array(), p = Json::array();
  for (const auto& x : v.traces) t.push_back(scalar_to_json(x));
  for (const auto& x : v.proj) p.push_back(scalar_to_json(x));
  j["traces"] = t;
  j["proj"] = p;
  j["full_plucker"] = v.full_plucker;
  j["in_two_to_one_domain"] = v.in_two_to_one_domain;
  return j;
}

}  // namespace matseq::json_io
