#ifndef A2S_TRAINER_HPP
#define A2S_TRAINER_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "a2s/batch.hpp"
#include "a2s/checkpoint.hpp"
#include "a2s/model.hpp"

namespace a2s {

struct OptimizerConfig {
    double initial_lr = 0.1;
    double momentum = 0.9;
    double weight_decay = 1e-4;
    std::size_t lr_step_epochs = 10; // lr divided by lr_divisor every this many epochs
    double lr_divisor = 10.0;
};

struct TrainConfig {
    ModelConfig model;
    OptimizerConfig optimizer;
    std::size_t epochs = 30;
    std::size_t batch_size = 100;
    std::uint64_t seed = 1;
    std::size_t progress_every = 20; // batches between progress lines; 0 = quiet
};

/// lr = initial / divisor^floor(epoch / step).
double lr_schedule(const OptimizerConfig& config, std::size_t epoch);

struct NonFiniteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// g' = g + wd*theta; v <- mu*v - lr*g'; theta <- theta + mu*v - lr*g'.
/// Only trainable entries of `params` are touched; grads and velocity hold
/// exactly those. Throws NonFiniteError naming the parameter before any update.
template <typename T>
void sgd_nesterov_step(ParamSet<T>& params, const ParamSet<T>& grads, ParamSet<T>& velocity, double lr,
                       double momentum, double weight_decay);

struct EpochRecord {
    std::size_t epoch = 0;
    double lr = 0.0;
    double train_loss = 0.0;
    double valid_loss = 0.0;
    double valid_top1 = 0.0;
    double valid_top2 = 0.0;
    double seconds = 0.0;
};

/// Batches of `batch_size` over a permutation; a final batch smaller than 2
/// is merged into its predecessor (batch norm needs two examples).
std::vector<std::vector<std::size_t>> make_batches(const std::vector<std::size_t>& order, std::size_t batch_size);

/// Fisher-Yates with the engine's raw output, identical on every platform.
std::vector<std::size_t> shuffled_indices(std::size_t n, Rng& rng);

struct TrainResult {
    Checkpoint final_state;
    std::vector<EpochRecord> log;
    std::size_t best_epoch = 0;
    double best_valid_top1 = -1.0;
};

/// Trains from a fresh initialization. With a nonempty `out_dir` writes
/// train_log.csv, best.ckpt and final.ckpt (final is refreshed every epoch).
/// `valid` may be null: the train set then doubles as the validation set.
TrainResult train(const TrainConfig& config, const BatchSource& train_set, const BatchSource* valid,
                  const std::filesystem::path& out_dir = {}, const std::string& dataset_hash = {},
                  std::ostream* progress = nullptr);

} // namespace a2s

#endif
