#include "pmeans/report_io.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "pmeans/format.hpp"

namespace pmeans::ineq {
namespace {

std::string num_field(double v) { return std::isnan(v) ? std::string() : fmt15(v); }

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  fields.push_back(cur);
  return fields;
}

constexpr const char* kHeader = "claim_id,variant,p,q,a,b,x,lhs,rhs,margin,status";

}  // namespace

void write_csv(std::ostream& os, const std::vector<ClaimReport>& reports) {
  os << kHeader << "\n";
  for (const auto& r : reports) {
    os << r.claim_id << ',' << r.variant << ',' << num_field(r.p) << ',' << num_field(r.q)
       << ',' << num_field(r.a) << ',' << num_field(r.b) << ',' << num_field(r.x) << ','
       << num_field(r.lhs) << ',' << num_field(r.rhs) << ',' << num_field(r.margin) << ','
       << to_string(r.status) << "\n";
  }
}

std::vector<ClaimReport> read_csv(std::istream& is) {
  std::vector<ClaimReport> out;
  std::string line;
  if (!std::getline(is, line)) return out;
  if (line != kHeader) throw std::invalid_argument("read_csv: unexpected header: " + line);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto f = split_line(line);
    if (f.size() != 11) throw std::invalid_argument("read_csv: malformed row: " + line);
    ClaimReport r;
    r.claim_id = f[0];
    r.variant = f[1];
    r.p = parse_double(f[2]);
    r.q = parse_double(f[3]);
    r.a = parse_double(f[4]);
    r.b = parse_double(f[5]);
    r.x = parse_double(f[6]);
    r.lhs = parse_double(f[7]);
    r.rhs = parse_double(f[8]);
    r.margin = parse_double(f[9]);
    r.status = status_from_string(f[10]);
    out.push_back(std::move(r));
  }
  return out;
}

void write_json(std::ostream& os, const std::vector<ClaimReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json o;
    o["claim_id"] = r.claim_id;
    o["variant"] = r.variant;
    const auto set = [&o](const char* key, double v) {
      if (!std::isnan(v)) o[key] = v;
    };
    set("p", r.p);
    set("q", r.q);
    set("a", r.a);
    set("b", r.b);
    set("x", r.x);
    set("lhs", r.lhs);
    set("rhs", r.rhs);
    set("margin", r.margin);
    o["status"] = to_string(r.status);
    if (!r.note.empty()) o["note"] = r.note;
    arr.push_back(std::move(o));
  }
  os << arr.dump(2) << "\n";
}

std::vector<ClaimReport> read_json(std::istream& is) {
  nlohmann::json arr = nlohmann::json::parse(is);
  std::vector<ClaimReport> out;
  for (const auto& o : arr) {
    ClaimReport r;
    r.claim_id = o.at("claim_id").get<std::string>();
    r.variant = o.at("variant").get<std::string>();
    const auto get = [&o](const char* key) {
      return o.contains(key) ? o.at(key).get<double>() : std::nan("");
    };
    r.p = get("p");
    r.q = get("q");
    r.a = get("a");
    r.b = get("b");
    r.x = get("x");
    r.lhs = get("lhs");
    r.rhs = get("rhs");
    r.margin = get("margin");
    r.status = status_from_string(o.at("status").get<std::string>());
    if (o.contains("note")) r.note = o.at("note").get<std::string>();
    out.push_back(std::move(r));
  }
  return out;
}

std::string to_csv(const std::vector<ClaimReport>& reports) {
  std::ostringstream os;
  write_csv(os, reports);
  return os.str();
}

std::string to_json(const std::vector<ClaimReport>& reports) {
  std::ostringstream os;
  write_json(os, reports);
  return os.str();
}

}  // namespace pmeans::ineq
