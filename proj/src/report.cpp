#include "radial/report.hpp"

#include <fstream>
#include <stdexcept>

namespace radial {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Reported:
      return "reported";
  }
  return "fail";
}

namespace {

Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "reported") return Status::Reported;
  throw std::invalid_argument("unknown status '" + s + "'");
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json VerificationReport::to_json() const {
  Json j;
  j["name"] = name;
  j["params"] = params;
  j["status"] = to_string(status);
  j["lhs"] = optional_json(lhs);
  j["rhs"] = optional_json(rhs);
  j["ratio"] = optional_json(ratio);
  j["ms"] = optional_json(ms);
  return j;
}

VerificationReport VerificationReport::from_json(const Json& j) {
  VerificationReport r;
  r.name = j.at("name").get<std::string>();
  r.params = j.at("params");
  r.status = status_from_string(j.at("status").get<std::string>());
  if (!j.at("lhs").is_null()) r.lhs = j.at("lhs").get<std::string>();
  if (!j.at("rhs").is_null()) r.rhs = j.at("rhs").get<std::string>();
  if (!j.at("ratio").is_null()) r.ratio = j.at("ratio").get<double>();
  if (!j.at("ms").is_null()) r.ms = j.at("ms").get<double>();
  return r;
}

Totals tally(const std::vector<VerificationReport>& checks) {
  Totals t;
  for (const auto& c : checks) {
    switch (c.status) {
      case Status::Pass:
        ++t.pass;
        break;
      case Status::Fail:
        ++t.fail;
        break;
      case Status::Reported:
        ++t.reported;
        break;
    }
  }
  return t;
}

Json make_document(const Json& config, const std::vector<VerificationReport>& checks) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["config"] = config;
  doc["checks"] = Json::array();
  for (const auto& c : checks) doc["checks"].push_back(c.to_json());
  const Totals t = tally(checks);
  doc["totals"] = {{"checks", static_cast<int>(checks.size())},
                   {"pass", t.pass},
                   {"fail", t.fail},
                   {"reported", t.reported}};
  return doc;
}

std::string dump_document(const Json& doc) { return doc.dump(2) + "\n"; }

void write_document(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open report file " + path.string());
  out << dump_document(doc);
  if (!out) throw std::runtime_error("failed writing report file " + path.string());
}

}  // namespace radial
