class Importer {
    void run(boolean dry) {
        if (dry) {
            preview();
        }
        parse();
        commit();
    }
}
