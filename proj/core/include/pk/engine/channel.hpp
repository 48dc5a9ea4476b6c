#pragma once

#include <chrono>
#include <condition_variable>
#include <deque>
#include <mutex>
#include <optional>
#include <stop_token>

namespace pk::engine {

/// Unbounded FIFO queue with non-blocking send and receive.
template <class T>
class Channel {
 public:
  void send(T value)
  {
    std::lock_guard lock(mutex_);
    queue_.push_back(std::move(value));
  }

  std::optional<T> try_receive()
  {
    std::lock_guard lock(mutex_);
    if (queue_.empty()) return std::nullopt;
    T v = std::move(queue_.front());
    queue_.pop_front();
    return v;
  }

  std::size_t size() const
  {
    std::lock_guard lock(mutex_);
    return queue_.size();
  }

 private:
  mutable std::mutex mutex_;
  std::deque<T> queue_;
};

/// Sleeps for `d` unless `stop` fires first; returns false if stopped.
inline bool interruptible_sleep(const std::stop_token& stop, std::chrono::milliseconds d)
{
  std::mutex m;
  std::condition_variable_any cv;
  std::unique_lock lock(m);
  return !cv.wait_for(lock, stop, d, [] { return false; });
}

}  // namespace pk::engine
