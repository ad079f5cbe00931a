class Importer {
    void run(boolean dry) {
        if (dry) {
            preview();
        } else {
            parse();
            commit();
        }
    }
}
