#include "oos/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <limits>
#include <ostream>
#include <queue>
#include <random>
#include <stdexcept>

namespace oos {

void SimConfig::validate() const {
    if (!(horizon_h > 0.0)) throw std::domain_error("SimConfig: horizon <= 0");
    if (replications < 1) throw std::domain_error("SimConfig: replications < 1");
    if (warmup_h < 0.0 || warmup_h >= horizon_h) {
        throw std::domain_error("SimConfig: warmup outside [0, horizon)");
    }
}

std::uint64_t replication_seed(std::uint64_t master_seed, int replication_index) {
    // splitmix64 step keyed by the replication index
    std::uint64_t z = master_seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(replication_index) + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

enum class EventKind { ModuleFailure, InventoryReview, Delivery, RepairComplete, ServicerReturn };

const char* event_name(EventKind k) {
    switch (k) {
        case EventKind::ModuleFailure: return "failure";
        case EventKind::InventoryReview: return "review";
        case EventKind::Delivery: return "delivery";
        case EventKind::RepairComplete: return "repair-complete";
        case EventKind::ServicerReturn: return "servicer-return";
    }
    return "?";
}

struct Event {
    double time;
    std::uint64_t seq;  // FIFO tie-break for simultaneous events
    EventKind kind;
    int module = -1;
    int quantity = 0;
    double failure_time = 0.0;
};

struct EventLater {
    bool operator()(const Event& a, const Event& b) const {
        if (a.time != b.time) return a.time > b.time;
        return a.seq > b.seq;
    }
};

class Replication {
public:
    Replication(const ScenarioModel& model, int capacity, const SimConfig& config,
                std::uint64_t seed)
        : model_(model), config_(config), capacity_(capacity), on_hand_(capacity), rng_(seed) {}

    SimOutcome run();

private:
    struct Demand {
        double failure_time;
        int module;
        bool presented = false;  // has had its service-start decision
    };

    double uniform() {
        return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    }
    double exponential(double rate) {
        return -std::log1p(-uniform()) / rate;
    }

    void push(Event ev) {
        ev.seq = next_seq_++;
        heap_.push(ev);
    }

    void schedule_failure(int module, double now) {
        push({now + exponential(model_.failure_rate()), 0, EventKind::ModuleFailure, module});
    }

    void check_state() const {
        if (!config_.check_invariants) return;
        if (on_hand_ < 0 || backorders_ < 0 || in_flight_ < 0) {
            throw std::logic_error("simulator: negative depot state");
        }
        if (on_hand_ > 0 && backorders_ > 0) {
            throw std::logic_error("simulator: stock on hand alongside backorders");
        }
    }

    void trace(double t, EventKind kind, int module) {
        if (config_.trace == nullptr) return;
        char line[160];
        std::snprintf(line, sizeof line, "%.6f,%s,%d,%zu,%d,%d\n", t, event_name(kind), module,
                      queue_.size(), on_hand_, backorders_);
        *config_.trace << line;
    }

    // Service-start decision for the head of the queue. The demand is
    // presented to the depot here: it is filled if stock is on hand,
    // otherwise it becomes the (single) backorder awaiting a delivery.
    void try_start_service(double now) {
        if (servicer_busy_ || queue_.empty()) return;
        Demand& head = queue_.front();
        const bool counted = head.failure_time >= config_.warmup_h;
        if (on_hand_ > 0) {
            if (!head.presented) {
                if (counted) {
                    ++demands_;
                    ++filled_;
                }
            } else {
                --backorders_;
            }
            --on_hand_;
            const Demand started = head;
            queue_.pop_front();
            servicer_busy_ = true;
            ++in_service_;
            const TravelAtom& leg = model_.travel()[started.module /
                                                    model_.constellation().modules_per_satellite];
            const double t_repair_done = now + leg.outbound_h + model_.repair_time_h();
            const double t_return = t_repair_done + leg.inbound_h;
            busy_time_ += std::min(t_return, config_.horizon_h) - now;
            push({t_repair_done, 0, EventKind::RepairComplete, started.module, 0,
                  started.failure_time});
            push({t_return, 0, EventKind::ServicerReturn});
        } else if (!head.presented) {
            head.presented = true;
            ++backorders_;
            if (counted) ++demands_;
        }
        check_state();
    }

    const ScenarioModel& model_;
    const SimConfig& config_;
    const int capacity_;

    int on_hand_;
    int backorders_ = 0;
    long in_flight_ = 0;
    std::deque<Demand> queue_;
    bool servicer_busy_ = false;
    int in_service_ = 0;  // services started whose repair has not completed

    std::priority_queue<Event, std::vector<Event>, EventLater> heap_;
    std::uint64_t next_seq_ = 0;
    std::mt19937_64 rng_;

    double busy_time_ = 0.0;
    double wait_sum_ = 0.0;
    long wait_samples_ = 0;
    long completed_repairs_ = 0;
    long failures_ = 0;
    long demands_ = 0;
    long filled_ = 0;
    long deliveries_ = 0;
};

SimOutcome Replication::run() {
    for (int m = 0; m < model_.n_modules(); ++m) {
        schedule_failure(m, 0.0);
    }
    push({exponential(model_.launch_rate()), 0, EventKind::InventoryReview});

    while (!heap_.empty()) {
        const Event ev = heap_.top();
        heap_.pop();
        if (ev.time > config_.horizon_h) break;

        switch (ev.kind) {
            case EventKind::ModuleFailure: {
                ++failures_;
                queue_.push_back({ev.time, ev.module});
                try_start_service(ev.time);
                break;
            }
            case EventKind::InventoryReview: {
                const long position = (on_hand_ - backorders_) + in_flight_;
                long order = capacity_ - position;
                if (order > 0) {
                    if (config_.rocket_capacity_enforced) {
                        order = std::min<long>(order, capacity_);
                    }
                    if (order > 0) {
                        in_flight_ += order;
                        push({ev.time + model_.lead_time_h(), 0, EventKind::Delivery, -1,
                              static_cast<int>(order)});
                    }
                }
                if (config_.check_invariants && !config_.rocket_capacity_enforced &&
                    (on_hand_ - backorders_) + in_flight_ < capacity_) {
                    throw std::logic_error("simulator: inventory position below capacity after ordering");
                }
                push({ev.time + exponential(model_.launch_rate()), 0, EventKind::InventoryReview});
                break;
            }
            case EventKind::Delivery: {
                ++deliveries_;
                in_flight_ -= ev.quantity;
                on_hand_ += ev.quantity;
                // Backordered demand is satisfied before anything else.
                try_start_service(ev.time);
                break;
            }
            case EventKind::RepairComplete: {
                ++completed_repairs_;
                --in_service_;
                if (ev.failure_time >= config_.warmup_h) {
                    wait_sum_ += ev.time - ev.failure_time;
                    ++wait_samples_;
                }
                // The module resumes operation (and its failure clock) now,
                // while the servicer is still flying home.
                schedule_failure(ev.module, ev.time);
                break;
            }
            case EventKind::ServicerReturn: {
                servicer_busy_ = false;
                try_start_service(ev.time);
                break;
            }
        }
        trace(ev.time, ev.kind, ev.module);
        check_state();
    }

    if (config_.check_invariants) {
        // Every failure is accounted for: completed, still queued, or in service.
        const long accounted = completed_repairs_ + static_cast<long>(queue_.size()) + in_service_;
        if (accounted != failures_) {
            throw std::logic_error("simulator: failure conservation violated");
        }
    }

    SimOutcome out;
    out.wait_samples = wait_samples_;
    out.mean_wait_h = wait_samples_ > 0 ? wait_sum_ / wait_samples_
                                        : std::numeric_limits<double>::quiet_NaN();
    out.observed_fill_rate = demands_ > 0 ? static_cast<double>(filled_) / demands_ : 0.0;
    out.servicer_utilization = busy_time_ / config_.horizon_h;
    out.failures = failures_;
    out.deliveries = deliveries_;
    return out;
}

}  // namespace

SimOutcome run_replication(const ScenarioModel& model, int capacity, const SimConfig& config,
                           std::uint64_t seed) {
    if (capacity < 0) throw std::domain_error("run_replication: capacity < 0");
    config.validate();
    Replication rep(model, capacity, config, seed);
    return rep.run();
}

BatchResult run_batch(const ScenarioModel& model, int capacity, const SimConfig& config) {
    config.validate();
    BatchResult batch;
    batch.replications.reserve(config.replications);
    SimConfig per_rep = config;
    for (int i = 0; i < config.replications; ++i) {
        per_rep.trace = i == 0 ? config.trace : nullptr;
        batch.replications.push_back(
            run_replication(model, capacity, per_rep, replication_seed(config.rng_seed, i)));
    }

    double mean_acc = 0.0;
    double fill_acc = 0.0;
    double util_acc = 0.0;
    long usable = 0;
    for (const auto& r : batch.replications) {
        if (r.wait_samples > 0) {
            mean_acc += r.mean_wait_h;
            ++usable;
        }
        fill_acc += r.observed_fill_rate;
        util_acc += r.servicer_utilization;
    }
    batch.mean_wait_h = usable > 0 ? mean_acc / usable : std::numeric_limits<double>::quiet_NaN();
    batch.observed_fill_rate = fill_acc / config.replications;
    batch.servicer_utilization = util_acc / config.replications;

    if (usable > 1) {
        double ss = 0.0;
        for (const auto& r : batch.replications) {
            if (r.wait_samples > 0) {
                const double d = r.mean_wait_h - batch.mean_wait_h;
                ss += d * d;
            }
        }
        batch.std_error_h = std::sqrt(ss / (usable - 1)) / std::sqrt(static_cast<double>(usable));
    }
    return batch;
}

}  // namespace oos
