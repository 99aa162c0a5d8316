#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "thue/diophantine.hpp"
#include "thue/forms.hpp"
#include "thue/laws.hpp"
#include "thue/roots.hpp"
#include "thue/search.hpp"
#include "thue/units.hpp"

namespace thue {

/* jsonl: one JSON object per line; csv: header + rows (solutions only);
 * pretty: aligned human-readable text. */
enum class output_format { jsonl, csv, pretty };

output_format parse_format(const std::string& name);

/* Big integers are serialized as decimal strings: values overflow 64-bit
 * integers routinely and JSON numbers would silently lose digits. */
nlohmann::ordered_json to_json(const solution& s);
nlohmann::ordered_json to_json(const form_coeffs& fc);
nlohmann::ordered_json to_json(const root_triple& rt, int digits = 20);
nlohmann::ordered_json to_json(const bound_report& br);
nlohmann::ordered_json to_json(const witness& w);
nlohmann::ordered_json to_json(const table_report& tr);
nlohmann::ordered_json to_json(const order_element& e);
nlohmann::ordered_json to_json(const gamma_triple& g);
nlohmann::ordered_json to_json(const unit_decomposition& d);
nlohmann::ordered_json to_json(const lambda_report& lr, int digits = 20);
nlohmann::ordered_json to_json(const law_report& lr);
nlohmann::ordered_json to_json(const pm_one_report& pr);
nlohmann::ordered_json to_json(const std::vector<diagonal_violation>& dv);

void write_solutions(std::ostream& out, const std::vector<solution>& sols,
                     output_format fmt);
void write_witnesses(std::ostream& out, const std::vector<witness>& ws,
                     output_format fmt);

}  // namespace thue
