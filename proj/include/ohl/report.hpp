#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ohl {

struct Counterexample {
  std::string cell;                  // which cell or side the element lives in
  std::vector<std::size_t> element;  // decoded apex tuple
  std::string detail;
};

struct AxiomRecord {
  std::string id;
  bool pass = true;
  std::optional<Counterexample> cex;
  std::string note;
};

struct CheckReport {
  std::vector<AxiomRecord> records;

  bool passed() const;
  std::size_t failures() const;
  const AxiomRecord* find(const std::string& id) const;
  bool passed(const std::string& id) const;
  void add(std::string id, std::optional<Counterexample> cex, std::string note = {});
  void append(const CheckReport& other, const std::string& prefix = {});
};

std::string tuple_str(const std::vector<std::size_t>& t);
std::string describe(const AxiomRecord& r);

}  // namespace ohl
