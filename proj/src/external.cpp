#include <plp/external.hpp>
#include <plp/error.hpp>

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <ctime>
#include <optional>
#include <utility>

#include <fcntl.h>
#include <poll.h>
#include <pthread.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

namespace plp {
namespace {

class Fd {
public:
	Fd() = default;
	explicit Fd(int fd) : fd_(fd) {}
	Fd(const Fd&) = delete;
	Fd& operator=(const Fd&) = delete;
	Fd(Fd&& o) noexcept : fd_(o.release()) {}
	Fd& operator=(Fd&& o) noexcept {
		if (this != &o) {
			reset();
			fd_ = o.release();
		}
		return *this;
	}
	~Fd() { reset(); }

	int get() const noexcept { return fd_; }
	explicit operator bool() const noexcept { return fd_ >= 0; }
	int release() noexcept { return std::exchange(fd_, -1); }
	void reset() noexcept {
		if (fd_ >= 0) { ::close(fd_); }
		fd_ = -1;
	}

private:
	int fd_ = -1;
};

struct Pipe {
	Fd read, write;
};

Pipe make_pipe() {
	int fds[2];
	if (::pipe2(fds, O_CLOEXEC) != 0) {
		throw ExternalSolverError(ExternalSolverError::Kind::Launch, std::string("pipe: ") + std::strerror(errno));
	}
	return Pipe{Fd(fds[0]), Fd(fds[1])};
}

class TempFile {
public:
	explicit TempFile(std::string_view contents) {
		const char* dir = std::getenv("TMPDIR");
		path_ = std::string(dir && *dir ? dir : "/tmp") + "/plp-XXXXXX.lp";
		Fd fd(::mkstemps(path_.data(), 3));
		if (!fd) {
			throw ExternalSolverError(ExternalSolverError::Kind::Launch, "cannot create temporary file: "
			                                                                 + std::string(std::strerror(errno)));
		}
		std::size_t done = 0;
		while (done < contents.size()) {
			ssize_t n = ::write(fd.get(), contents.data() + done, contents.size() - done);
			if (n < 0 && errno == EINTR) { continue; }
			if (n < 0) {
				::unlink(path_.c_str());
				throw ExternalSolverError(ExternalSolverError::Kind::Launch, "cannot write temporary file");
			}
			done += static_cast<std::size_t>(n);
		}
	}
	TempFile(const TempFile&) = delete;
	TempFile& operator=(const TempFile&) = delete;
	~TempFile() { ::unlink(path_.c_str()); }

	const std::string& path() const noexcept { return path_; }

private:
	std::string path_;
};

// Blocks SIGPIPE for the calling thread so a solver that closes its input
// early surfaces as EPIPE; restores the mask and drops the pending signal.
class SigpipeGuard {
public:
	SigpipeGuard() {
		sigset_t block;
		sigemptyset(&block);
		sigaddset(&block, SIGPIPE);
		pthread_sigmask(SIG_BLOCK, &block, &old_);
	}
	~SigpipeGuard() {
		sigset_t pipe_only;
		sigemptyset(&pipe_only);
		sigaddset(&pipe_only, SIGPIPE);
		timespec zero{0, 0};
		while (sigtimedwait(&pipe_only, nullptr, &zero) > 0) {}
		pthread_sigmask(SIG_SETMASK, &old_, nullptr);
	}
	const sigset_t& old_mask() const noexcept { return old_; }

private:
	sigset_t old_;
};

std::string replace_all(std::string s, std::string_view token, std::string_view with) {
	for (std::size_t pos = 0; (pos = s.find(token, pos)) != std::string::npos; pos += with.size()) {
		s.replace(pos, token.size(), with);
	}
	return s;
}

} // namespace

std::vector<std::string> split_command(std::string_view command) {
	std::vector<std::string> out;
	std::string word;
	bool in_word = false;
	char quote = 0;
	for (char c : command) {
		if (quote) {
			if (c == quote) { quote = 0; }
			else { word += c; }
		}
		else if (c == '\'' || c == '"') {
			quote = c;
			in_word = true;
		}
		else if (std::isspace(static_cast<unsigned char>(c))) {
			if (in_word) { out.push_back(std::move(word)); }
			word.clear();
			in_word = false;
		}
		else {
			word += c;
			in_word = true;
		}
	}
	if (in_word) { out.push_back(std::move(word)); }
	return out;
}

ExternalRun run_external(std::string_view program_text, const std::vector<std::string>& command, Dialect dialect,
                         std::chrono::milliseconds timeout) {
	using Kind = ExternalSolverError::Kind;
	if (command.empty()) { throw ExternalSolverError(Kind::Launch, "empty solver command"); }

	constexpr std::string_view kFileToken = "{file}";
	std::optional<TempFile> file;
	std::vector<std::string> argv_strings = command;
	bool via_file = std::any_of(command.begin(), command.end(),
	                            [&](const std::string& a) { return a.find(kFileToken) != std::string::npos; });
	if (via_file) {
		file.emplace(program_text);
		for (auto& a : argv_strings) { a = replace_all(a, kFileToken, file->path()); }
	}
	std::vector<char*> argv;
	for (auto& a : argv_strings) { argv.push_back(a.data()); }
	argv.push_back(nullptr);

	SigpipeGuard sigpipe;
	Pipe in = make_pipe(), out = make_pipe(), err = make_pipe(), status = make_pipe();

	pid_t pid = ::fork();
	if (pid < 0) { throw ExternalSolverError(Kind::Launch, std::string("fork: ") + std::strerror(errno)); }
	if (pid == 0) {
		pthread_sigmask(SIG_SETMASK, &sigpipe.old_mask(), nullptr);
		if (via_file) {
			int devnull = ::open("/dev/null", O_RDONLY);
			::dup2(devnull, STDIN_FILENO);
		}
		else {
			::dup2(in.read.get(), STDIN_FILENO);
		}
		::dup2(out.write.get(), STDOUT_FILENO);
		::dup2(err.write.get(), STDERR_FILENO);
		::execvp(argv[0], argv.data());
		int e = errno;
		[[maybe_unused]] auto n = ::write(status.write.get(), &e, sizeof e);
		::_exit(127);
	}
	in.read.reset();
	out.write.reset();
	err.write.reset();
	status.write.reset();

	int exec_errno = 0;
	ssize_t got;
	do { got = ::read(status.read.get(), &exec_errno, sizeof exec_errno); } while (got < 0 && errno == EINTR);
	if (got == static_cast<ssize_t>(sizeof exec_errno)) {
		::waitpid(pid, nullptr, 0);
		throw ExternalSolverError(Kind::Launch, "cannot run '" + command[0] + "': " + std::strerror(exec_errno));
	}

	if (via_file) { in.write.reset(); }
	if (in.write) { ::fcntl(in.write.get(), F_SETFL, O_NONBLOCK); }

	ExternalRun run;
	std::size_t written = 0;
	if (in.write && program_text.empty()) { in.write.reset(); }
	const auto deadline = std::chrono::steady_clock::now() + timeout;
	bool timed_out = false;
	while (out.read || err.read) {
		auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - std::chrono::steady_clock::now());
		if (left.count() <= 0) {
			timed_out = true;
			break;
		}
		pollfd fds[3];
		nfds_t nfds = 0;
		auto add = [&](const Fd& fd, short events) {
			if (fd) { fds[nfds++] = pollfd{fd.get(), events, 0}; }
		};
		add(in.write, POLLOUT);
		add(out.read, POLLIN);
		add(err.read, POLLIN);
		int ready = ::poll(fds, nfds, static_cast<int>(std::min<long long>(left.count(), 1000)));
		if (ready < 0 && errno != EINTR) { break; }
		for (nfds_t i = 0; i < nfds && ready > 0; ++i) {
			if (!fds[i].revents) { continue; }
			if (fds[i].fd == in.write.get()) {
				ssize_t n = ::write(in.write.get(), program_text.data() + written, program_text.size() - written);
				if (n > 0) { written += static_cast<std::size_t>(n); }
				if ((n < 0 && errno != EAGAIN && errno != EINTR) || written == program_text.size()) { in.write.reset(); }
				continue;
			}
			Fd& src = fds[i].fd == out.read.get() ? out.read : err.read;
			std::string& sink = fds[i].fd == out.read.get() ? run.transcript : run.diagnostics;
			char buf[4096];
			ssize_t n = ::read(src.get(), buf, sizeof buf);
			if (n > 0) { sink.append(buf, static_cast<std::size_t>(n)); }
			else if (n == 0 || (errno != EAGAIN && errno != EINTR)) { src.reset(); }
		}
	}
	in.write.reset();

	int wstatus = 0;
	if (timed_out) {
		::kill(pid, SIGKILL);
		::waitpid(pid, &wstatus, 0);
		throw ExternalSolverError(Kind::Timeout, "solver '" + command[0] + "' timed out after "
		                                             + std::to_string(timeout.count()) + " ms",
		                          run.transcript);
	}
	while (::waitpid(pid, &wstatus, 0) < 0 && errno == EINTR) {}
	run.exit_code = WIFEXITED(wstatus) ? WEXITSTATUS(wstatus) : 128 + WTERMSIG(wstatus);

	try {
		run.answer_sets = parse_answer_sets(run.transcript, dialect);
	}
	catch (const FormatError& e) {
		throw ExternalSolverError(Kind::Format, e.what(), run.transcript, run.exit_code);
	}
	// clingo reports an unsatisfiable program with status 20
	bool unsat = run.transcript.find("UNSATISFIABLE") != std::string::npos;
	if (run.exit_code != 0 && run.answer_sets.empty() && !unsat) {
		throw ExternalSolverError(Kind::Exit, "solver '" + command[0] + "' exited with status "
		                                          + std::to_string(run.exit_code) + " and no answer sets",
		                          run.transcript, run.exit_code);
	}
	return run;
}

} // namespace plp
