/*
 * Copyright 2026 The gamedyn Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "gamedyn/strategy.hpp"

#include <algorithm>
#include <limits>

#include "gamedyn/error.hpp"

namespace gamedyn {

ProfileSpace::ProfileSpace(const Game& g) : vertex_count_(g.vertex_count()) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.is_terminal(v)) continue;
    decision_.push_back(v);
    options_.push_back(g.successors(v));
  }
  weight_.assign(decision_.size(), 1);
  size_ = 1;
  for (std::size_t k = decision_.size(); k-- > 0;) {
    weight_[k] = size_;
    size_ = mul_saturate(size_, options_[k].size());
  }
}

Profile ProfileSpace::at(std::uint64_t index) const {
  Profile p(vertex_count_, kNoVertex);
  for (std::size_t k = 0; k < decision_.size(); ++k) {
    const std::uint64_t digit = (index / weight_[k]) % options_[k].size();
    p[decision_[k]] = options_[k][digit];
  }
  return p;
}

std::uint64_t ProfileSpace::index_of(const Profile& p) const {
  std::uint64_t index = 0;
  for (std::size_t k = 0; k < decision_.size(); ++k) {
    const auto& opts = options_[k];
    auto it = std::lower_bound(opts.begin(), opts.end(), p.at(decision_[k]));
    if (it == opts.end() || *it != p[decision_[k]])
      throw Error(ErrorCode::InvalidArgument, "profile chooses a non-successor");
    index += weight_[k] * static_cast<std::uint64_t>(it - opts.begin());
  }
  return index;
}

std::uint64_t profile_count(const Game& g) { return ProfileSpace(g).size(); }

std::vector<Profile> enumerate_profiles(const Game& g, const Limits& limits) {
  ProfileSpace space(g);
  check_guard(space.size(), limits, "positional profiles");
  std::vector<Profile> out;
  out.reserve(space.size());
  for (std::uint64_t i = 0; i < space.size(); ++i) out.push_back(space.at(i));
  return out;
}

bool is_profile(const Game& g, const Profile& p) {
  if (p.size() != g.vertex_count()) return false;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.is_terminal(v) ? p[v] != kNoVertex : !g.has_edge(v, p[v])) return false;
  }
  return true;
}

Play outcome(const Game& g, const Profile& sigma, VertexId v) {
  std::vector<int> pos(g.vertex_count(), -1);
  std::vector<VertexId> seq;
  while (!g.is_terminal(v) && pos[v] < 0) {
    pos[v] = static_cast<int>(seq.size());
    seq.push_back(v);
    v = sigma[v];
  }
  if (g.is_terminal(v)) {
    seq.push_back(v);
    return Play::finite(std::move(seq));
  }
  // The walk closes on v; vertices are pairwise distinct so this is canonical.
  std::vector<VertexId> stem(seq.begin(), seq.begin() + pos[v]);
  std::vector<VertexId> loop(seq.begin() + pos[v], seq.end());
  return Play::lasso(std::move(stem), std::move(loop));
}

std::vector<std::pair<VertexId, Profile>> deviations_p1(const Game& g, const Profile& sigma,
                                                        int player) {
  std::vector<std::pair<VertexId, Profile>> out;
  for (VertexId v : g.vertices_of(player)) {
    for (VertexId w : g.successors(v)) {
      if (w == sigma[v]) continue;
      Profile next = sigma;
      next[v] = w;
      out.emplace_back(v, std::move(next));
    }
  }
  return out;
}

namespace {

std::size_t rank_with(const Game& g, Profile& sigma, VertexId v, VertexId w) {
  const VertexId saved = sigma[v];
  sigma[v] = w;
  const std::size_t r = g.preference(g.owner(v)).rank(outcome(g, sigma, v));
  sigma[v] = saved;
  return r;
}

}  // namespace

std::vector<VertexId> best_replies(const Game& g, const Profile& sigma, VertexId v) {
  Profile work = sigma;
  std::vector<VertexId> best;
  std::size_t best_rank = std::numeric_limits<std::size_t>::max();
  for (VertexId w : g.successors(v)) {
    const std::size_t r = rank_with(g, work, v, w);
    if (r < best_rank) {
      best_rank = r;
      best.clear();
    }
    if (r == best_rank) best.push_back(w);
  }
  return best;
}

bool improves(const Game& g, const Profile& sigma, VertexId v, VertexId w) {
  if (w == sigma[v]) return false;
  Profile work = sigma;
  return rank_with(g, work, v, w) < rank_with(g, work, v, sigma[v]);
}

std::string profile_name(const Game& g, const Profile& sigma) {
  bool labelled = g.has_edge_labels();
  for (VertexId v = 0; v < g.vertex_count() && labelled; ++v) {
    if (g.successors(v).size() < 2) continue;
    for (VertexId w : g.successors(v))
      if (g.edge_label(v, w).empty()) labelled = false;
  }
  std::string out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.successors(v).size() < 2) continue;
    if (labelled) {
      out += g.edge_label(v, sigma[v]);
    } else {
      if (!out.empty()) out += ',';
      out += g.name(v) + ">" + g.name(sigma[v]);
    }
  }
  return out.empty() ? "*" : out;
}

std::vector<VertexId> restrict_to(const Game& g, const Profile& sigma, int player) {
  std::vector<VertexId> out;
  for (VertexId v : g.vertices_of(player)) out.push_back(sigma[v]);
  return out;
}

namespace {

void extend_histories(const Game& g, std::vector<VertexId>& path,
                      std::vector<std::vector<VertexId>>& out) {
  if (g.is_terminal(path.back())) return;
  out.push_back(path);
  for (VertexId w : g.successors(path.back())) {
    path.push_back(w);
    extend_histories(g, path, out);
    path.pop_back();
  }
}

}  // namespace

HistorySpace::HistorySpace(const Game& g) {
  if (!g.is_acyclic())
    throw Error(ErrorCode::CyclicArena, "history profiles need an acyclic arena");
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::vector<VertexId> path{v};
    extend_histories(g, path, hist_);
  }
  std::sort(hist_.begin(), hist_.end());
  for (std::size_t k = 0; k < hist_.size(); ++k) {
    index_.emplace(hist_[k], k);
    options_.push_back(g.successors(hist_[k].back()));
  }
  weight_.assign(hist_.size(), 1);
  size_ = 1;
  for (std::size_t k = hist_.size(); k-- > 0;) {
    weight_[k] = size_;
    size_ = mul_saturate(size_, options_[k].size());
  }
}

std::size_t HistorySpace::find(const std::vector<VertexId>& h) const {
  auto it = index_.find(h);
  return it == index_.end() ? hist_.size() : it->second;
}

std::vector<VertexId> HistorySpace::at(std::uint64_t index) const {
  std::vector<VertexId> choice(hist_.size());
  for (std::size_t k = 0; k < hist_.size(); ++k)
    choice[k] = options_[k][(index / weight_[k]) % options_[k].size()];
  return choice;
}

std::uint64_t HistorySpace::index_of(const std::vector<VertexId>& choice) const {
  std::uint64_t index = 0;
  for (std::size_t k = 0; k < hist_.size(); ++k) {
    const auto& opts = options_[k];
    auto it = std::lower_bound(opts.begin(), opts.end(), choice.at(k));
    if (it == opts.end() || *it != choice[k])
      throw Error(ErrorCode::InvalidArgument, "history profile chooses a non-successor");
    index += weight_[k] * static_cast<std::uint64_t>(it - opts.begin());
  }
  return index;
}

Play HistorySpace::outcome(const std::vector<VertexId>& choice, std::size_t k) const {
  std::vector<VertexId> path = hist_.at(k);
  std::size_t at = k;
  while (at < hist_.size()) {
    path.push_back(choice[at]);
    at = find(path);
  }
  return Play::finite(std::move(path));
}

}  // namespace gamedyn
