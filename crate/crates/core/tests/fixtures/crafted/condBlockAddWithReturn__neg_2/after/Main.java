class Job {
    int run(int a) {
        if (a > 0) {
            process(a);
        }
        return a;
    }
}
