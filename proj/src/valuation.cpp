/*
 * Copyright 2026 the ebgverify authors
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

#include "ebg/valuation.hpp"

#include <algorithm>

#include "ebg/errors.hpp"

namespace ebg {

Valuation::Valuation(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end());
  if (std::adjacent_find(atoms_.begin(), atoms_.end()) != atoms_.end())
    throw Error("duplicate atom in valuation domain");
  values_.assign(atoms_.size(), 0);
}

Valuation Valuation::from_index(std::vector<std::string> atoms, std::uint64_t k) {
  Valuation v(std::move(atoms));
  for (std::size_t j = 0; j < v.atoms_.size(); ++j)
    v.values_[j] = static_cast<unsigned char>((k >> j) & 1u);
  return v;
}

int Valuation::index_of(std::string_view atom) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), atom);
  if (it == atoms_.end() || *it != atom) return -1;
  return static_cast<int>(it - atoms_.begin());
}

bool Valuation::value(std::string_view atom) const {
  int i = index_of(atom);
  if (i < 0) throw Error("valuation has no atom '" + std::string(atom) + "'");
  return values_[static_cast<std::size_t>(i)] != 0;
}

bool Valuation::has_atom(std::string_view atom) const { return index_of(atom) >= 0; }

void Valuation::set(std::string_view atom, bool v) {
  int i = index_of(atom);
  if (i < 0) throw Error("valuation has no atom '" + std::string(atom) + "'");
  values_[static_cast<std::size_t>(i)] = v ? 1 : 0;
}

Valuation Valuation::restricted_to(std::span<const std::string> atoms) const {
  Valuation r(std::vector<std::string>(atoms.begin(), atoms.end()));
  for (const auto& a : r.atoms_) r.set(a, value(a));
  return r;
}

Valuation Valuation::merged(const Valuation& a, const Valuation& b) {
  std::vector<std::string> dom = a.atoms_;
  dom.insert(dom.end(), b.atoms_.begin(), b.atoms_.end());
  Valuation r{std::move(dom)};  // ctor rejects overlap via duplicate check
  for (const auto& p : a.atoms_) r.set(p, a.value(p));
  for (const auto& p : b.atoms_) r.set(p, b.value(p));
  return r;
}

std::string Valuation::to_string() const {
  if (atoms_.empty()) return "-";
  std::string out;
  for (std::size_t j = 0; j < atoms_.size(); ++j) {
    if (j) out += ',';
    out += atoms_[j];
    out += '=';
    out += values_[j] ? '1' : '0';
  }
  return out;
}

std::vector<Valuation> enumerate_valuations(std::vector<std::string> atoms) {
  Valuation base{std::move(atoms)};
  if (base.size() > 20) throw LimitError("cannot enumerate valuations over more than 20 atoms");
  std::vector<Valuation> out;
  const std::uint64_t total = std::uint64_t{1} << base.size();
  out.reserve(total);
  for (std::uint64_t k = 0; k < total; ++k)
    out.push_back(Valuation::from_index(base.atoms(), k));
  return out;
}

}  // namespace ebg
