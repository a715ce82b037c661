#include "experiments.hpp"

namespace rqlost {

// Reference aggregates for the table2 sweep, quoted to four decimals, row
// order matching table2(): r-major, K ascending. Columns are
// {r, K, avg_ub_sl_pct, avg_lb_sl_pct, avg_diff_pct, max_diff_pct, min_diff_pct}.
const std::vector<AggregateRow>& table2_reference() {
  static const std::vector<AggregateRow> rows = {
      {2, 0.50, 97.4745, 95.2381, 2.2364, 2.2364, 2.2364},
      {2, 0.75, 93.4371, 89.5753, 3.8618, 3.8618, 3.8618},
      {2, 1.00, 88.0797, 83.3333, 4.7464, 4.7464, 4.7464},
      {2, 1.50, 76.2059, 71.5789, 4.6270, 4.6270, 4.6270},
      {2, 2.00, 65.4676, 61.9048, 3.5628, 3.5628, 3.5628},
      {4, 0.50, 98.8653, 97.1735, 1.6917, 1.8401, 1.3951},
      {4, 0.75, 95.3513, 91.3801, 3.9712, 4.2889, 3.3358},
      {4, 1.00, 89.3513, 84.0794, 5.2718, 5.6346, 4.5463},
      {4, 1.50, 74.6444, 70.0166, 4.6279, 4.8301, 4.2234},
      {4, 2.00, 61.8761, 58.9152, 2.9609, 3.0258, 2.8310},
      {8, 0.50, 99.7070, 98.9482, 0.7588, 0.9617, 0.5450},
      {8, 0.75, 97.3315, 94.0050, 3.3265, 4.1430, 2.4457},
      {8, 1.00, 91.1333, 85.9177, 5.2156, 6.2760, 4.0134},
      {8, 1.50, 73.4863, 69.5106, 3.9756, 4.3996, 3.4102},
      {8, 2.00, 59.1460, 57.1057, 2.0404, 2.1109, 1.9060},
      {16, 0.50, 99.9709, 99.8342, 0.1366, 0.1656, 0.0932},
      {16, 0.75, 98.8840, 96.7878, 2.0962, 2.5214, 1.4513},
      {16, 1.00, 93.2321, 88.6468, 4.5854, 5.3774, 3.3326},
      {16, 1.50, 73.1628, 70.2620, 2.9008, 3.1609, 2.4177},
      {16, 2.00, 58.0321, 56.8141, 1.2180, 1.2533, 1.1257},
      {32, 0.50, 99.9994, 99.9944, 0.0050, 0.0063, 0.0033},
      {32, 0.75, 99.6863, 98.7511, 0.9352, 1.1834, 0.6161},
      {32, 1.00, 94.9119, 91.0831, 3.8289, 4.7048, 2.6455},
      {32, 1.50, 72.5549, 70.7089, 1.8460, 2.0453, 1.5062},
      {32, 2.00, 57.0984, 56.4255, 0.6730, 0.6921, 0.6180},
      {64, 0.50, 100.0000, 100.0000, 0.0000, 0.0000, 0.0000},
      {64, 0.75, 99.9569, 99.7382, 0.2187, 0.2776, 0.1413},
      {64, 1.00, 96.2880, 93.2642, 3.0238, 3.7480, 2.0323},
      {64, 1.50, 72.2779, 71.2231, 1.0547, 1.1697, 0.8524},
      {64, 2.00, 56.7408, 56.3845, 0.3563, 0.3661, 0.3262},
      {128, 0.50, 100.0000, 100.0000, 0.0000, 0.0000, 0.0000},
      {128, 0.75, 99.9984, 99.9834, 0.0150, 0.0190, 0.0096},
      {128, 1.00, 97.3203, 95.0070, 2.3133, 2.8828, 1.5248},
      {128, 1.50, 72.1011, 71.5312, 0.5698, 0.6320, 0.4579},
      {128, 2.00, 56.5268, 56.3429, 0.1839, 0.1888, 0.1681},
      {256, 0.50, 100.0000, 100.0000, 0.0000, 0.0000, 0.0000},
      {256, 0.75, 100.0000, 99.9999, 0.0001, 0.0001, 0.0001},
      {256, 1.00, 98.0831, 96.3572, 1.7259, 2.1551, 1.1246},
      {256, 1.50, 72.0381, 71.7404, 0.2977, 0.3299, 0.2386},
      {256, 2.00, 56.4499, 56.3564, 0.0935, 0.0960, 0.0854},
      {512, 0.50, 100.0000, 100.0000, 0.0000, 0.0000, 0.0000},
      {512, 0.75, 100.0000, 100.0000, 0.0000, 0.0000, 0.0000},
      {512, 1.00, 98.6328, 97.3640, 1.2688, 1.5947, 0.8195},
      {512, 1.50, 71.9856, 71.8331, 0.1525, 0.1692, 0.1220},
      {512, 2.00, 56.3871, 56.3400, 0.0471, 0.0484, 0.0430},
      {1024, 0.50, 100.0000, 100.0000, 0.0000, 0.0000, 0.0000},
      {1024, 0.75, 100.0000, 100.0000, 0.0000, 0.0000, 0.0000},
      {1024, 1.00, 99.0280, 98.1062, 0.9218, 1.1614, 0.5919},
      {1024, 1.50, 71.9620, 71.8848, 0.0772, 0.0857, 0.0617},
      {1024, 2.00, 56.3590, 56.3353, 0.0237, 0.0243, 0.0216},
  };
  return rows;
}

}  // namespace rqlost
