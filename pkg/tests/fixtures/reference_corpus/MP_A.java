class MP_A extends MP_B, MP_C
{
    MP_A()
    {
        try
        {
            FileOutputStream log_out = new FileOutputStream(logfile);
            log_out.writeBytes("started");
        }
        catch (IOException e)
        {
            System.out.println("IO exception: " + e);
        }
    }
}
