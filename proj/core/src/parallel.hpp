// SPDX-License-Identifier: Apache-2.0
//
// nfsteer: near-field beam steering for planar antenna arrays
// Copyright (C) 2026 The nfsteer authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstddef>
#include <exception>
#include <limits>

namespace nfsteer::detail
{

// Runs fn(i) for i in [0, n) across OpenMP threads. Each index is an
// independent work unit. If any call throws, the exception of the lowest
// failing index is rethrown after the loop.
template <typename Fn> void parallel_for(std::size_t n, Fn &&fn, int chunk = 16)
{
    std::exception_ptr failure;
    long long failed_index = std::numeric_limits<long long>::max();
    const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, chunk)
    for (long long i = 0; i < count; ++i)
    {
        try
        {
            fn(static_cast<std::size_t>(i));
        }
        catch (...)
        {
#pragma omp critical(nfsteer_parallel_failure)
            {
                if (i < failed_index)
                {
                    failed_index = i;
                    failure = std::current_exception();
                }
            }
        }
    }
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace nfsteer::detail
