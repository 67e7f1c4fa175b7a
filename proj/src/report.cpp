#include "ohl/report.hpp"

#include <algorithm>

namespace ohl {

bool CheckReport::passed() const {
  return std::all_of(records.begin(), records.end(), [](const AxiomRecord& r) { return r.pass; });
}

std::size_t CheckReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const AxiomRecord& r) { return !r.pass; }));
}

const AxiomRecord* CheckReport::find(const std::string& id) const {
  for (const auto& r : records)
    if (r.id == id) return &r;
  return nullptr;
}

bool CheckReport::passed(const std::string& id) const {
  const AxiomRecord* r = find(id);
  return r != nullptr && r->pass;
}

void CheckReport::add(std::string id, std::optional<Counterexample> cex, std::string note) {
  AxiomRecord r;
  r.id = std::move(id);
  r.pass = !cex.has_value();
  r.cex = std::move(cex);
  r.note = std::move(note);
  records.push_back(std::move(r));
}

void CheckReport::append(const CheckReport& other, const std::string& prefix) {
  for (auto r : other.records) {
    r.id = prefix + r.id;
    records.push_back(std::move(r));
  }
}

std::string tuple_str(const std::vector<std::size_t>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

std::string describe(const AxiomRecord& r) {
  std::string s = r.id + (r.pass ? ": pass" : ": FAIL");
  if (r.cex) s += " at " + r.cex->cell + " " + tuple_str(r.cex->element) + " " + r.cex->detail;
  if (!r.note.empty()) s += " [" + r.note + "]";
  return s;
}

}  // namespace ohl
