// Copyright 2026 The schutte Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "schutte/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace schutte {

std::string to_string(SatStatus s) {
  switch (s) {
    case SatStatus::kSat: return "SAT";
    case SatStatus::kUnsat: return "UNSAT";
    case SatStatus::kUnknown: return "UNKNOWN";
  }
  return "?";
}

std::string SolverOptions::fingerprint() const {
  std::ostringstream os;
  os << "cdcl/" << (branching == Branching::kActivity ? "vsids" : "index")
     << "/restarts=" << (restarts ? 1 : 0) << "/decay=" << var_decay
     << "/luby=" << luby_unit;
  return os.str();
}

bool satisfies(const CnfFormula& f, const std::vector<bool>& model) {
  for (const auto& c : f.clauses) {
    bool ok = false;
    for (Literal l : c) {
      const int v = std::abs(l);
      if (v < static_cast<int>(model.size()) && model[v] == (l > 0)) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

namespace {

// Internal literal: 2 * var + (negative ? 1 : 0), var 0-based.
using Lit = int;
constexpr Lit kNoLit = -1;
constexpr int kNoReason = -1;

inline int VarOf(Lit l) { return l >> 1; }
inline Lit Neg(Lit l) { return l ^ 1; }
inline Lit FromDimacs(Literal l) {
  return 2 * (std::abs(l) - 1) + (l < 0 ? 1 : 0);
}

constexpr std::uint8_t kFalse = 0;
constexpr std::uint8_t kTrue = 1;
constexpr std::uint8_t kUndef = 2;

double Luby(double y, int x) {
  int size = 1;
  int seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  return std::pow(y, seq);
}

class Cdcl {
 public:
  Cdcl(const CnfFormula& f, const Budget& budget, const SolverOptions& opt)
      : opt_(opt),
        budget_(budget),
        start_(std::chrono::steady_clock::now()),
        nvars_(f.var_count),
        assign_(nvars_, kUndef),
        level_(nvars_, 0),
        reason_(nvars_, kNoReason),
        phase_(nvars_, 1),
        seen_(nvars_, 0),
        activity_(nvars_, 0.0),
        heap_pos_(nvars_, -1),
        watches_(2 * static_cast<std::size_t>(nvars_)) {
    for (int v = 0; v < nvars_; ++v) HeapInsert(v);
    for (const auto& c : f.clauses) {
      if (!AddInput(c)) {
        unsat_at_root_ = true;
        break;
      }
    }
  }

  SolveResult Run() {
    SolveResult out;
    out.status = Search();
    stats_.seconds = Elapsed();
    out.stats = stats_;
    if (out.status == SatStatus::kSat) {
      out.model.assign(nvars_ + 1, false);
      for (int v = 0; v < nvars_; ++v) out.model[v + 1] = assign_[v] == kTrue;
    }
    return out;
  }

 private:
  struct ClauseData {
    std::vector<Lit> lits;
    bool learnt = false;
    bool deleted = false;
    int lbd = 0;
  };
  struct Watcher {
    int cref;
    Lit blocker;
  };

  std::uint8_t Value(Lit l) const {
    const std::uint8_t a = assign_[VarOf(l)];
    return a == kUndef ? kUndef : static_cast<std::uint8_t>(a ^ (l & 1));
  }
  int DecisionLevel() const { return static_cast<int>(trail_lim_.size()); }

  double Elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

  bool OutOfBudget() {
    if (budget_.max_decisions && stats_.decisions >= *budget_.max_decisions) {
      return true;
    }
    if (budget_.max_conflicts && stats_.conflicts >= *budget_.max_conflicts) {
      return true;
    }
    if (budget_.time_limit && (++budget_checks_ & 255) == 0) {
      return Elapsed() * 1000.0 >= static_cast<double>(budget_.time_limit->count());
    }
    return false;
  }

  // Level-0 insertion of an input clause. Returns false on a root conflict.
  bool AddInput(const Clause& raw) {
    std::vector<Lit> lits;
    lits.reserve(raw.size());
    for (Literal l : raw) lits.push_back(FromDimacs(l));
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    std::vector<Lit> kept;
    for (std::size_t i = 0; i < lits.size(); ++i) {
      if (i + 1 < lits.size() && lits[i + 1] == Neg(lits[i])) return true;  // tautology
      const auto v = Value(lits[i]);
      if (v == kTrue) return true;
      if (v == kUndef) kept.push_back(lits[i]);
    }
    if (kept.empty()) return false;
    if (kept.size() == 1) {
      Enqueue(kept[0], kNoReason);
      return Propagate() == kNoReason;
    }
    Attach(std::move(kept), false, 0);
    return true;
  }

  int Attach(std::vector<Lit> lits, bool learnt, int lbd) {
    const int cref = static_cast<int>(clauses_.size());
    watches_[Neg(lits[0])].push_back({cref, lits[1]});
    watches_[Neg(lits[1])].push_back({cref, lits[0]});
    clauses_.push_back({std::move(lits), learnt, false, lbd});
    if (learnt) learnts_.push_back(cref);
    return cref;
  }

  void Enqueue(Lit l, int reason) {
    const int v = VarOf(l);
    assign_[v] = static_cast<std::uint8_t>((l & 1) ? kFalse : kTrue);
    level_[v] = DecisionLevel();
    reason_[v] = reason;
    trail_.push_back(l);
  }

  // Returns the conflicting clause or kNoReason.
  int Propagate() {
    int conflict = kNoReason;
    while (qhead_ < trail_.size()) {
      const Lit p = trail_[qhead_++];
      const Lit false_lit = Neg(p);
      auto& ws = watches_[p];
      ++stats_.propagations;
      std::size_t i = 0;
      std::size_t j = 0;
      const std::size_t end = ws.size();
      while (i < end) {
        const Watcher w = ws[i++];
        if (Value(w.blocker) == kTrue) {
          ws[j++] = w;
          continue;
        }
        ClauseData& c = clauses_[w.cref];
        if (c.deleted) continue;
        auto& lits = c.lits;
        if (lits[0] == false_lit) std::swap(lits[0], lits[1]);
        const Lit first = lits[0];
        if (first != w.blocker && Value(first) == kTrue) {
          ws[j++] = {w.cref, first};
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < lits.size(); ++k) {
          if (Value(lits[k]) != kFalse) {
            std::swap(lits[1], lits[k]);
            watches_[Neg(lits[1])].push_back({w.cref, first});
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[j++] = {w.cref, first};
        if (Value(first) == kFalse) {
          conflict = w.cref;
          qhead_ = trail_.size();
          while (i < end) ws[j++] = ws[i++];
        } else {
          Enqueue(first, w.cref);
        }
      }
      ws.resize(j);
      if (conflict != kNoReason) break;
    }
    return conflict;
  }

  // First-UIP learning. Fills `learnt` (asserting literal first) and returns
  // the backjump level.
  int Analyze(int conflict, std::vector<Lit>& learnt) {
    learnt.clear();
    learnt.push_back(kNoLit);
    int path = 0;
    Lit p = kNoLit;
    int index = static_cast<int>(trail_.size()) - 1;
    do {
      const auto& lits = clauses_[conflict].lits;
      for (std::size_t k = (p == kNoLit ? 0 : 1); k < lits.size(); ++k) {
        const Lit q = lits[k];
        const int v = VarOf(q);
        if (seen_[v] || level_[v] == 0) continue;
        BumpVar(v);
        seen_[v] = 1;
        if (level_[v] >= DecisionLevel()) {
          ++path;
        } else {
          learnt.push_back(q);
        }
      }
      while (!seen_[VarOf(trail_[index])]) --index;
      p = trail_[index--];
      conflict = reason_[VarOf(p)];
      seen_[VarOf(p)] = 0;
      --path;
    } while (path > 0);
    learnt[0] = Neg(p);

    // Drop literals implied by the rest of the clause (local minimization).
    to_clear_.assign(learnt.begin(), learnt.end());
    std::size_t kept = 1;
    for (std::size_t k = 1; k < learnt.size(); ++k) {
      const int v = VarOf(learnt[k]);
      const int r = reason_[v];
      bool redundant = r != kNoReason;
      if (redundant) {
        const auto& rl = clauses_[r].lits;
        for (std::size_t x = 1; x < rl.size(); ++x) {
          const int u = VarOf(rl[x]);
          if (!seen_[u] && level_[u] > 0) {
            redundant = false;
            break;
          }
        }
      }
      if (!redundant) learnt[kept++] = learnt[k];
    }
    learnt.resize(kept);
    for (Lit l : to_clear_) {
      if (l != kNoLit) seen_[VarOf(l)] = 0;
    }

    int back = 0;
    if (learnt.size() > 1) {
      std::size_t max_i = 1;
      for (std::size_t k = 2; k < learnt.size(); ++k) {
        if (level_[VarOf(learnt[k])] > level_[VarOf(learnt[max_i])]) max_i = k;
      }
      std::swap(learnt[1], learnt[max_i]);
      back = level_[VarOf(learnt[1])];
    }
    return back;
  }

  int Lbd(const std::vector<Lit>& lits) {
    ++lbd_stamp_;
    if (lbd_mark_.empty()) lbd_mark_.assign(nvars_ + 1, 0);
    int n = 0;
    for (Lit l : lits) {
      const int lv = level_[VarOf(l)];
      if (lbd_mark_[lv] != lbd_stamp_) {
        lbd_mark_[lv] = lbd_stamp_;
        ++n;
      }
    }
    return n;
  }

  void Backtrack(int level) {
    if (DecisionLevel() <= level) return;
    for (int k = static_cast<int>(trail_.size()) - 1; k >= trail_lim_[level]; --k) {
      const int v = VarOf(trail_[k]);
      phase_[v] = static_cast<std::uint8_t>(trail_[k] & 1);
      assign_[v] = kUndef;
      reason_[v] = kNoReason;
      if (heap_pos_[v] < 0) HeapInsert(v);
      if (v < index_cursor_) index_cursor_ = v;
    }
    trail_.resize(trail_lim_[level]);
    trail_lim_.resize(level);
    qhead_ = trail_.size();
  }

  Lit PickBranch() {
    if (opt_.branching == SolverOptions::Branching::kIndexOrder) {
      while (index_cursor_ < nvars_ && assign_[index_cursor_] != kUndef) {
        ++index_cursor_;
      }
      if (index_cursor_ >= nvars_) return kNoLit;
      return 2 * index_cursor_ + phase_[index_cursor_];
    }
    while (!heap_.empty()) {
      const int v = HeapPop();
      if (assign_[v] == kUndef) return 2 * v + phase_[v];
    }
    return kNoLit;
  }

  void ReduceDb() {
    std::vector<int> candidates;
    for (int cref : learnts_) {
      const auto& c = clauses_[cref];
      if (c.deleted || c.lbd <= 2 || Locked(cref)) continue;
      candidates.push_back(cref);
    }
    std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
      if (clauses_[a].lbd != clauses_[b].lbd) return clauses_[a].lbd > clauses_[b].lbd;
      return a < b;
    });
    for (std::size_t k = 0; k < candidates.size() / 2; ++k) {
      auto& c = clauses_[candidates[k]];
      c.deleted = true;
      c.lits.clear();
      c.lits.shrink_to_fit();
    }
    std::erase_if(learnts_, [&](int cref) { return clauses_[cref].deleted; });
  }

  bool Locked(int cref) const {
    const auto& lits = clauses_[cref].lits;
    const int v = VarOf(lits[0]);
    return reason_[v] == cref && Value(lits[0]) == kTrue;
  }

  SatStatus Search() {
    if (unsat_at_root_) return SatStatus::kUnsat;
    if (Propagate() != kNoReason) return SatStatus::kUnsat;
    std::vector<Lit> learnt;
    int restart_no = 0;
    std::uint64_t restart_at = static_cast<std::uint64_t>(Luby(2, 0) * opt_.luby_unit);
    std::uint64_t conflicts_since_restart = 0;
    std::uint64_t next_reduce = 2000;
    for (;;) {
      const int conflict = Propagate();
      if (conflict != kNoReason) {
        ++stats_.conflicts;
        ++conflicts_since_restart;
        if (DecisionLevel() == 0) return SatStatus::kUnsat;
        const int back = Analyze(conflict, learnt);
        Backtrack(back);
        if (learnt.size() == 1) {
          Enqueue(learnt[0], kNoReason);
        } else {
          const int lbd = Lbd(learnt);
          const int cref = Attach(learnt, true, lbd);
          ++stats_.learnt_clauses;
          Enqueue(learnt[0], cref);
        }
        DecayActivities();
        continue;
      }
      if (OutOfBudget()) return SatStatus::kUnknown;
      if (opt_.restarts && conflicts_since_restart >= restart_at) {
        ++stats_.restarts;
        conflicts_since_restart = 0;
        ++restart_no;
        restart_at = static_cast<std::uint64_t>(Luby(2, restart_no) * opt_.luby_unit);
        Backtrack(0);
      }
      if (stats_.conflicts >= next_reduce) {
        next_reduce = stats_.conflicts + 2000 + 300 * (next_reduce / 2000);
        ReduceDb();
      }
      const Lit next = PickBranch();
      if (next == kNoLit) return SatStatus::kSat;
      ++stats_.decisions;
      trail_lim_.push_back(static_cast<int>(trail_.size()));
      Enqueue(next, kNoReason);
    }
  }

  // Activity heap (max-heap, ties to the lower index).
  bool HeapBefore(int a, int b) const {
    return activity_[a] > activity_[b] || (activity_[a] == activity_[b] && a < b);
  }
  void HeapInsert(int v) {
    heap_pos_[v] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    SiftUp(heap_pos_[v]);
  }
  int HeapPop() {
    const int top = heap_[0];
    heap_[0] = heap_.back();
    heap_pos_[heap_[0]] = 0;
    heap_.pop_back();
    heap_pos_[top] = -1;
    if (!heap_.empty()) SiftDown(0);
    return top;
  }
  void SiftUp(int i) {
    const int v = heap_[i];
    while (i > 0) {
      const int parent = (i - 1) / 2;
      if (!HeapBefore(v, heap_[parent])) break;
      heap_[i] = heap_[parent];
      heap_pos_[heap_[i]] = i;
      i = parent;
    }
    heap_[i] = v;
    heap_pos_[v] = i;
  }
  void SiftDown(int i) {
    const int v = heap_[i];
    const int size = static_cast<int>(heap_.size());
    for (;;) {
      int child = 2 * i + 1;
      if (child >= size) break;
      if (child + 1 < size && HeapBefore(heap_[child + 1], heap_[child])) ++child;
      if (!HeapBefore(heap_[child], v)) break;
      heap_[i] = heap_[child];
      heap_pos_[heap_[i]] = i;
      i = child;
    }
    heap_[i] = v;
    heap_pos_[v] = i;
  }
  void BumpVar(int v) {
    activity_[v] += var_inc_;
    if (activity_[v] > 1e100) {
      for (auto& a : activity_) a *= 1e-100;
      var_inc_ *= 1e-100;
    }
    if (heap_pos_[v] >= 0) SiftUp(heap_pos_[v]);
  }
  void DecayActivities() { var_inc_ /= opt_.var_decay; }

  SolverOptions opt_;
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  SolverStats stats_;
  std::uint64_t budget_checks_ = 0;
  bool unsat_at_root_ = false;

  int nvars_;
  std::vector<std::uint8_t> assign_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<std::uint8_t> phase_;
  std::vector<std::uint8_t> seen_;
  std::vector<double> activity_;
  std::vector<int> heap_pos_;
  std::vector<int> heap_;
  double var_inc_ = 1.0;
  int index_cursor_ = 0;

  std::vector<ClauseData> clauses_;
  std::vector<int> learnts_;
  std::vector<std::vector<Watcher>> watches_;
  std::vector<Lit> trail_;
  std::vector<int> trail_lim_;
  std::size_t qhead_ = 0;
  std::vector<Lit> to_clear_;
  std::vector<int> lbd_mark_;
  int lbd_stamp_ = 0;
};

}  // namespace

SolveResult solve(const CnfFormula& f, const Budget& budget,
                  const SolverOptions& options) {
  Cdcl solver(f, budget, options);
  return solver.Run();
}

}  // namespace schutte
