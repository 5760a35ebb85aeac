class loopa
{
  loopa ()
  {
    int a=0;
    int i=0;
    try
    {
      FileOutputStream file_output=new FileOutputStream(file);
      DataOutputStream data_out=new DataOutputStream(file_output);
      for (i = 0;i < 10;i++)
      {
          data_out.writeInt(i);
          data_out.writeDouble(i);
      }
          file_output.close();
      }
      catch (IOException e)
      {
          System.out.println("IO exception: " + e);
      }}
}
