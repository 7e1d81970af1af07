#include "binpack/hybrid.hpp"

#include <iterator>
#include <stdexcept>

namespace binpack {

HybridPacker::HybridPacker(const FrequencyVector& f_pred, LambdaRatio lambda, int m, int k,
                           HybridConfig config)
    : k_(k),
      lambda_(lambda),
      pp_(f_pred, m, k, config.pp),
      robust_(config.robust == RobustAlgo::FirstFit
                  ? std::variant<FirstFitPacker, BestFitPacker>(
                        std::in_place_type<FirstFitPacker>, k, Provenance::ABin)
                  : std::variant<FirstFitPacker, BestFitPacker>(
                        std::in_place_type<BestFitPacker>, k, Provenance::ABin)),
      count_(static_cast<std::size_t>(k) + 1, 0),
      ppcount_(static_cast<std::size_t>(k) + 1, 0) {
    if (lambda.den < 1 || lambda.num < 0 || lambda.num > lambda.den)
        throw std::invalid_argument("lambda must be a rational in [0,1]");
}

bool HybridPacker::pp_item(int x) const {
    // ppcount(x) <= lambda * count(x), compared exactly. lambda = 0 serves
    // everything with A: with num = 0 the comparison would still admit the
    // first item of each size (0 <= 0), so the endpoint is excluded here.
    if (lambda_.num == 0) return false;
    return ppcount_[static_cast<std::size_t>(x)] * lambda_.den <=
           lambda_.num * count_[static_cast<std::size_t>(x)];
}

void HybridPacker::place(int x) {
    if (x < 1 || x > k_)
        throw std::invalid_argument("item size " + std::to_string(x) + " outside [1," +
                                    std::to_string(k_) + "]");
    count_[static_cast<std::size_t>(x)]++;
    if (pp_.has_nonempty_slot(x)) {
        ppcount_[static_cast<std::size_t>(x)]++;
        pp_.place(x);
    } else if (pp_item(x)) {
        ppcount_[static_cast<std::size_t>(x)]++;
        pp_.place(x);
    } else {
        std::visit([x](auto& packer) { packer.place(x); }, robust_);
    }
}

std::size_t HybridPacker::cost() const {
    return pp_.cost() + std::visit([](const auto& packer) { return packer.cost(); }, robust_);
}

Packing HybridPacker::finish() {
    Packing out = pp_.finish();
    Packing robust = std::visit([](auto& packer) { return packer.finish(); }, robust_);
    out.bins.insert(out.bins.end(), std::make_move_iterator(robust.bins.begin()),
                    std::make_move_iterator(robust.bins.end()));
    return out;
}

Packing hybrid(const std::vector<int>& items, const FrequencyVector& f_pred,
               LambdaRatio lambda, int m, int k, HybridConfig config) {
    HybridPacker packer(f_pred, lambda, m, k, config);
    for (int x : items) packer.place(x);
    return packer.finish();
}

HAwareResult h_aware(const std::vector<int>& items, const FrequencyVector& f_pred,
                     double H, double eps, double cA, int m, int k, HybridConfig config) {
    if (!(eps > 0.0) || !(eps < 0.2))
        throw std::invalid_argument("epsilon out of admissible range");
    if (H < 0.0) throw std::invalid_argument("error bound H must be nonnegative");
    if (!(cA > 1.0)) throw std::invalid_argument("robust competitive ratio cA must exceed 1");

    HAwareResult result;
    result.threshold = (cA - 1.0 - eps) / (k * (2.0 + 5.0 * eps));
    if (H < result.threshold) {
        result.branch = HAwareBranch::ProfilePacking;
        result.packing = profile_packing(items, f_pred, m, k, config.pp);
    } else {
        result.branch = HAwareBranch::Robust;
        result.packing = config.robust == RobustAlgo::FirstFit ? first_fit(items, k)
                                                               : best_fit(items, k);
    }
    return result;
}

}  // namespace binpack
