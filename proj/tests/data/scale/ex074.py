x = eval(input())
k = eval(input())
b = x
x = k
k = b
print(x)
print(k)
print(x == k)
