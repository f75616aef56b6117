#include "record.hpp"

namespace pellcount::cli {
namespace {

Nat parse_nat(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string())
    throw RecordError(std::string("field '") + key + "' must be a decimal string");
  const std::string& s = j.at(key).get_ref<const std::string&>();
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw RecordError(std::string("field '") + key + "' is not a decimal integer: " + s);
  return Nat(s);
}

template <class T>
T parse_num(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw RecordError(std::string("field '") + key + "' must be an integer");
  return j.at(key).get<T>();
}

}  // namespace

OutputRecord make_record(const Nat& p, const Nat& A, const BoundReport& bound) {
  OutputRecord r;
  r.p = p;
  r.A = A;
  r.A_mod = bound.label.A_mod;
  r.p_mod = bound.label.p_mod;
  if (!bound.label.p_is_two) r.legendre = bound.label.legendre;
  r.proved_bound = bound.proved;
  r.conjectured_bound = bound.conjectured;
  return r;
}

OutputRecord make_record(const SolveOutcome& outcome) {
  OutputRecord r = make_record(outcome.instance.p, outcome.instance.A, outcome.bound);
  r.solutions = outcome.solutions;
  r.complete = outcome.complete;
  r.notes = outcome.notes;
  return r;
}

Json to_json(const OutputRecord& rec) {
  Json j;
  j["p"] = rec.p.get_str();
  j["A"] = rec.A.get_str();
  Json cls;
  cls["A_mod"] = rec.A_mod;
  cls["p_mod"] = rec.p_mod;
  cls["legendre"] = rec.legendre ? Json(*rec.legendre) : Json(nullptr);
  j["class"] = std::move(cls);
  j["proved_bound"] = rec.proved_bound;
  if (rec.conjectured_bound) j["conjectured_bound"] = *rec.conjectured_bound;
  if (rec.solutions) {
    Json sols = Json::array();
    for (const Solution& s : *rec.solutions) {
      Json js;
      js["x"] = s.x.get_str();
      js["y"] = s.y.get_str();
      if (s.certificate) {
        js["subequation"] = std::string(to_string(s.certificate->tag));
        js["u"] = s.certificate->u.get_str();
        js["v"] = s.certificate->v.get_str();
      }
      sols.push_back(std::move(js));
    }
    j["solutions"] = std::move(sols);
  }
  j["complete"] = rec.complete;
  j["notes"] = rec.notes;
  return j;
}

OutputRecord parse_record(const Json& j) {
  if (!j.is_object()) throw RecordError("record must be a JSON object");
  OutputRecord r;
  r.p = parse_nat(j, "p");
  r.A = parse_nat(j, "A");
  if (!j.contains("class") || !j.at("class").is_object()) throw RecordError("missing 'class'");
  const Json& cls = j.at("class");
  r.A_mod = parse_num<unsigned>(cls, "A_mod");
  r.p_mod = parse_num<unsigned>(cls, "p_mod");
  if (cls.contains("legendre") && !cls.at("legendre").is_null()) r.legendre = parse_num<int>(cls, "legendre");
  r.proved_bound = parse_num<unsigned>(j, "proved_bound");
  if (j.contains("conjectured_bound")) r.conjectured_bound = parse_num<unsigned>(j, "conjectured_bound");
  if (!j.contains("complete") || !j.at("complete").is_boolean()) throw RecordError("missing 'complete'");
  r.complete = j.at("complete").get<bool>();
  if (j.contains("notes")) {
    if (!j.at("notes").is_string()) throw RecordError("'notes' must be a string");
    r.notes = j.at("notes").get<std::string>();
  }

  if (j.contains("solutions")) {
    if (!j.at("solutions").is_array()) throw RecordError("'solutions' must be an array");
    std::vector<Solution> sols;
    for (const Json& js : j.at("solutions")) {
      Solution s{parse_nat(js, "x"), parse_nat(js, "y"), std::nullopt};
      if (!satisfies_curve(r.p, r.A, s.x, s.y))
        throw RecordError("(" + s.x.get_str() + ", " + s.y.get_str() + ") is not on the curve");
      if (js.contains("subequation")) {
        const auto tag = parse_tag(js.at("subequation").get<std::string>());
        if (!tag) throw RecordError("unknown subequation " + js.at("subequation").dump());
        s.certificate = Certificate{*tag, parse_nat(js, "u"), parse_nat(js, "v")};
        // The certificate must reproduce the point.
        Solution lifted;
        try {
          lifted = lift(*tag, r.p, r.A, s.certificate->u, s.certificate->v);
        } catch (const std::exception& e) {
          throw RecordError(std::string("bad certificate: ") + e.what());
        }
        if (lifted.x != s.x || lifted.y != s.y) throw RecordError("certificate does not lift to (x, y)");
      }
      if (!sols.empty() && sols.back().x >= s.x) throw RecordError("solutions not sorted by x");
      sols.push_back(std::move(s));
    }
    r.solutions = std::move(sols);
  }
  return r;
}

}  // namespace pellcount::cli
