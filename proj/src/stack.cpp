#include "exact/stack.hpp"

#include <pthread.h>

#include <exception>
#include <stdexcept>
#include <string>

namespace exact {

namespace {

struct Job {
  const std::function<void()>* task;
  std::exception_ptr error;
};

void* trampoline(void* arg) {
  auto* job = static_cast<Job*>(arg);
  try {
    (*job->task)();
  } catch (...) {
    job->error = std::current_exception();
  }
  return nullptr;
}

}  // namespace

void run_with_stack(const std::function<void()>& task, std::size_t stack_bytes) {
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  if (pthread_attr_setstacksize(&attr, stack_bytes) != 0) {
    pthread_attr_destroy(&attr);
    throw std::runtime_error("invalid stack size " + std::to_string(stack_bytes));
  }
  Job job{&task, nullptr};
  pthread_t thread;
  const int rc = pthread_create(&thread, &attr, &trampoline, &job);
  pthread_attr_destroy(&attr);
  if (rc != 0) throw std::runtime_error("pthread_create failed");
  pthread_join(thread, nullptr);
  if (job.error) std::rethrow_exception(job.error);
}

}  // namespace exact
