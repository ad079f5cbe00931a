class Job {
    int run(int a) {
        process(a);
        return a;
    }
}
